#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgal/errors.hpp"
#include "dgal/runner.hpp"

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// temp-file + rename so partially written certificates never appear
void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
    }
    std::rename(tmp.c_str(), path.c_str());
}

void emit(const ojson& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) std::cout << text;
    else write_atomic(out_path, text);
}

json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return json::parse(in);
}

int run_command(const std::string& problem_path, const std::string& out_path) {
    json problem;
    try {
        problem = load(problem_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        ojson cert = dgal::run_task(problem);
        if (!cert.value("verified", true)) {
            std::cerr << "error: emitted certificate failed self-verification\n";
            return 3;
        }
        emit(cert, out_path);
        return 0;
    } catch (const dgal::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dgal::DivisionByZeroLiteral& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dgal::Error& e) {
        ojson err;
        err["error"]["code"] = e.code();
        err["error"]["message"] = e.what();
        emit(err, out_path);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int verify_command(const std::string& cert_path) {
    json cert;
    try {
        cert = load(cert_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        bool ok = dgal::verify_certificate(cert);
        std::cout << (ok ? "verified\n" : "verification failed\n");
        return ok ? 0 : 3;
    } catch (const dgal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact differential-algebra certificate toolkit"};
    app.require_subcommand(1);

    std::string problem_path, out_path, cert_path;
    auto* run = app.add_subcommand("run", "run a problem file and emit a certificate");
    run->add_option("problem", problem_path, "problem JSON file")->required();
    run->add_option("-o,--output", out_path, "certificate output path (default: stdout)");

    auto* verify = app.add_subcommand("verify", "re-verify an emitted certificate");
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return run_command(problem_path, out_path);
    return verify_command(cert_path);
}
