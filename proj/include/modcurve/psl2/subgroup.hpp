#pragma once

#include <string>
#include <variant>
#include <vector>

#include "modcurve/perm.hpp"
#include "modcurve/psl2/mat.hpp"

namespace modcurve {

// Finite-index subgroups of the modular group supported by the toolkit.
// All groups are understood projectively (as subgroups of PSL2(Z) that are
// images of the corresponding matrix groups containing or not containing -I;
// membership tests identify g and -g).

struct PrincipalCongruence {
    long N = 1;  // Gamma(N)
};

struct GammaZero {
    long N = 1;  // Gamma_0(N)
};

// Kernel of the homomorphism from the (free) level-two principal congruence
// group sending A = T^2 and B = S T^2 S^-1 to the given permutations.
struct Gamma2Kernel {
    Perm sigma_a;
    Perm sigma_b;
};

// Subgroup generated by a principal congruence group together with one extra
// element (given as a word); since the base is normal, this is the set
// Gamma(N) * <w>.
struct JoinWithCyclic {
    PrincipalCongruence base;
    Word extra;
};

using SubgroupSpec = std::variant<PrincipalCongruence, GammaZero, Gamma2Kernel, JoinWithCyclic>;

// Validates invariants (N >= 1; kernel permutations of equal degree
// generating a transitive group) and throws std::domain_error otherwise.
void validate_spec(const SubgroupSpec& spec);

// Exact membership (of the projective class of g).
bool is_member(const SubgroupSpec& spec, const PSL2& g);

// True when every element of the spec subgroup has the level-two parity
// pattern (diagonal odd, off-diagonal even).
bool contained_in_gamma2(const SubgroupSpec& spec);

// g lies in the level-two principal congruence group (projectively).
bool in_gamma2(const Mat& m);

// Unique reduced word in the free generators A = T^2, B = S T^2 S^-1 with
// word_eval(result) = g; throws std::domain_error if g is not in the
// level-two group.  Euclidean ping-pong on the first column.
Word gamma2_word_decompose(const PSL2& g);

// Image of g under the homomorphism A -> sigma_a, B -> sigma_b.
Perm gamma2_hom_image(const Gamma2Kernel& k, const PSL2& g);

// CLI syntax: gamma:N | gamma0:N | kernel:sigmaA=<cycles>;sigmaB=<cycles> |
// join:gamma:N;word=<word or [[a,b],[c,d]]>.
SubgroupSpec parse_subgroup_spec(const std::string& s);
std::string spec_text(const SubgroupSpec& spec);

}  // namespace modcurve
