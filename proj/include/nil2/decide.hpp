#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nil2/group.hpp"

namespace nil2 {

enum class Answer { Yes, No, UndeterminedOverQ };
std::string to_string(Answer a);

struct Verdict;

// Basis of a subspace V with one-dimensional bracket image spanned by
// image_line and nonsingular restricted bracket.
struct SubspaceWitness {
    RatMatrix basis;    // dimV x k, columns span V
    RatVec image_line;  // spanning vector of [V,V] in W-coordinates
};

// dimW linearly independent functionals, each of contraction rank <= k.
struct FunctionalWitness {
    std::vector<RatVec> functionals;
};

struct HomWitness {
    GroupHom hom;
};

// A <= N(k,1) <= B chain: the two supporting verdicts.
struct ChainWitness {
    std::size_t k;
    std::shared_ptr<Verdict> approx;  // A into N(k,1)
    std::shared_ptr<Verdict> embed;   // N(k,1) into B
};

// Complete rank locus as a refutation certificate.
struct LocusWitness {
    RankLocus locus;
};

struct Obstruction {
    std::string reason;
};

using Certificate = std::variant<std::monostate, SubspaceWitness, FunctionalWitness, HomWitness,
                                 ChainWitness, LocusWitness, Obstruction>;

struct Verdict {
    Answer answer;
    std::string question;
    Certificate certificate;
    std::vector<std::string> trace;
    std::vector<std::string> citations;
};

struct SearchOptions {
    int height = 2;                 // height bound for lines, columns and free coordinates
    int psi_height = 2;             // height bound for candidate center maps
    long long max_nodes = 150000;   // search budget before giving up
};

// Does N(k,1) embed into A? Yes certificates carry the subspace basis; a No
// is returned only with a provable obstruction. Throws OddK.
Verdict embeds_standard(const ClassTwoGroup& a, std::size_t k, const SearchOptions& opts = {});

// Does A approximate into N(k,1)? Decided through the rank locus for
// dimW = 2. Throws CenterRankUnsupported for dimW > 2.
Verdict approx_by_standard(const ClassTwoGroup& a, std::size_t k);

// A precedes B (rank-2 center): chain through some N(k,1), or an embedding
// with trivial kernels. Throws CenterRankUnsupported unless dimW_A == 2.
Verdict precedes(const ClassTwoGroup& a, const ClassTwoGroup& b, const SearchOptions& opts = {});

// The always-No verdict for "A ~ N(dimV,1)" when the center has rank 2.
// Throws CenterRankUnsupported (dimW != 2) and OddK (odd dimV).
Verdict full_rank_obstruction(const ClassTwoGroup& a);

struct IsoOutcome {
    enum class Kind { Isomorphic, Distinguished, UndeterminedOverQ };
    Kind kind;
    std::optional<GroupHom> iso;  // verified certificate when Isomorphic
    std::string invariant;        // name of the distinguishing invariant
    std::string details;
};

// Compares substitution-invariant data of the two pencils, then attempts a
// bounded-height search for an invertible compatible pair.
IsoOutcome iso_distinguish(const ClassTwoGroup& a, const ClassTwoGroup& b,
                           const SearchOptions& opts = {});

struct EquivClassReport {
    enum class Classification { StandardClass, IsomorphicPair, Distinct, UndeterminedOverQ };
    Classification classification;
    std::size_t k = 0;  // the common standard class for StandardClass
    std::string details;
    std::vector<Verdict> supporting;
    std::vector<std::string> trace;
    std::vector<std::string> citations;
};
std::string to_string(EquivClassReport::Classification c);

// Geometric-equivalence classification for center ranks 1 and 2 (mixed ranks
// reduce through the standard class of the rank-1 side).
EquivClassReport geom_equiv(const ClassTwoGroup& a, const ClassTwoGroup& b,
                            const SearchOptions& opts = {});

struct PaperExampleReport {
    ClassTwoGroup group;
    BinaryForm pfaffian_form;
    BinaryForm det_form;
    RankLocus locus_k2;
    Verdict embed_k2;
    Verdict approx_k2;
    Verdict obstruction_k4;
    EquivClassReport conclusion;
    std::vector<std::string> trace;
};

// Builds the shipped 4-dimensional example group with rank-2 center and runs
// the full classification against every N(k,1), with a numeric trace.
PaperExampleReport paper_example();

struct EmbeddingSearchResult {
    std::optional<GroupHom> hom;
    bool aborted;  // node budget exceeded before the bounded space was exhausted
};

// Bounded-height deterministic search for a hom A -> B with trivial kernels
// (bijective on both layers when require_bijective). Candidate center maps
// are filtered by rank compatibility; columns of the V-map are solved from
// the bracket constraints level by level.
EmbeddingSearchResult find_embedding(const ClassTwoGroup& a, const ClassTwoGroup& b,
                                     bool require_bijective, const SearchOptions& opts = {});

// Independent re-verification of certificates (used by tests and reports).
bool verify_subspace_witness(const ClassTwoGroup& a, std::size_t k, const SubspaceWitness& w);
bool verify_functional_witness(const ClassTwoGroup& a, std::size_t k, const FunctionalWitness& w);
bool verify_hom_witness(const GroupHom& hom, bool need_injective);

// Greedy symplectic extraction: k columns on which the form is nonsingular.
std::optional<RatMatrix> nonsingular_subspace(const AltForm& f, std::size_t k);

}  // namespace nil2
