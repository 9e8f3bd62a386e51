#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dgal/ore.hpp"

namespace dgal {

// Catalog description of a linear (differential) algebraic group, given as
// its structural decomposition: finite component count, Levi data and
// unipotent-radical module decomposition.
enum class SemisimpleFactor { SL2, SL3, Abstract };

struct FactorDesc {
    SemisimpleFactor kind;
    std::string tag;  // used for Abstract factors
};

struct ModuleDesc {
    int dim = 1;
    bool trivial_action = false;  // otherwise irreducible nontrivial
    std::string weight_tag;
};

struct AlgebraicDesc {
    std::vector<FactorDesc> semisimple;
    int torus_rank = 0;
    std::vector<ModuleDesc> modules;
    bool radical_commutative = true;
};

enum class DiffCatalogVariant { SectionFourG, SectionFourGPrime };

struct GroupDesc {
    int components = 1;  // order of G/G^0
    std::variant<AlgebraicDesc, DiffCatalogVariant> body;
};

struct QuotientVerdict {
    enum class Kind { None, GmWitness, GaWitness } kind = Kind::None;
    int witness_index = -1;  // torus / trivial-summand index when applicable

    std::string to_string() const {
        switch (kind) {
            case Kind::GmWitness: return "Gm-quotient";
            case Kind::GaWitness: return "Ga-quotient";
            default: return "none";
        }
    }
};

QuotientVerdict has_ga_or_gm_quotient(const GroupDesc& g);

// One generator of a witness: either a concrete square matrix over Q(t) or a
// symbolic placeholder for factors without a catalog matrix realization.
struct WitnessGenerator {
    std::string label;
    bool symbolic = false;
    std::vector<std::vector<RatT>> matrix;  // empty when symbolic
};

struct SideCondition {
    std::string description;
    bool holds = false;
};

struct GeneratorWitness {
    std::vector<WitnessGenerator> generators;
    std::vector<SideCondition> side_conditions;
    int coset_representatives = 1;
    bool symbolic_only = false;  // set when some factor lacks matrices
};

GeneratorWitness kolchin_dense_generators(const GroupDesc& g);

// Generators of the Section-4 group: lower-triangular 2x2 matrices
// [[1,0],[a_i,b_i]] with a_i in Q(t) and b_i a nonzero rational constant.
struct GaGmGenerator {
    RatT a;
    Rat b;
};

struct DensityObstructionCert {
    std::vector<GaGmGenerator> inputs;
    OreOperator op;  // nonzero, annihilates every a_i
    // The proper Kolchin-closed supergroup: lower-left entry a with
    // L(a) = 0, diagonal entry b with dt(b) = 0, b != 0.
    std::string supergroup;
};

DensityObstructionCert density_obstruction(const std::vector<GaGmGenerator>& elements);

// Exact product over a word of signed 1-based generator indices; returns the
// lower-left and diagonal entries of the resulting matrix.
struct GroupElement {
    RatT a;
    RatT b;
};

GroupElement word_eval(const std::vector<GaGmGenerator>& generators,
                       const std::vector<int>& word);

}  // namespace dgal
