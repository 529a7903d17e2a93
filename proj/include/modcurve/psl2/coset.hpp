#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modcurve/perm.hpp"
#include "modcurve/psl2/mat.hpp"
#include "modcurve/psl2/subgroup.hpp"

namespace modcurve {

enum class Ambient { Gamma1, Gamma2 };

namespace detail {
struct CosetLabeler;  // coset labeling strategy (congruence residue or image permutation)
}

// Right-coset table of a finite-index subgroup in the ambient group, built by
// breadth-first enumeration.  Coset 0 is the subgroup itself; right
// multiplication of representative i by generator g lands in coset
// sigma_g(i).  Generators are S, T for ambient Gamma(1) and A = T^2,
// B = S T^2 S^-1 for ambient Gamma(2).  Representative words are
// BFS-shortest, ties broken lexicographically (S < T, A < B).
class CosetTable {
  public:
    CosetTable(SubgroupSpec spec, Ambient ambient);

    Ambient ambient() const { return ambient_; }
    long index() const { return m_; }
    const SubgroupSpec& spec() const { return spec_; }

    // Generator permutations: sigma(0) for S or A, sigma(1) for T or B.
    const Perm& sigma(int generator) const;
    const Perm& sigma_s() const { return sigma(0); }
    const Perm& sigma_t() const { return sigma(1); }
    const Perm& sigma_a() const { return sigma(0); }
    const Perm& sigma_b() const { return sigma(1); }

    // Composite right action of S*T (ambient Gamma(1) only).
    Perm sigma_st() const;

    const std::vector<Word>& rep_words() const { return rep_words_; }
    const std::vector<Mat>& reps() const { return reps_; }

    // Index of the coset containing g; throws std::domain_error when g is
    // outside the ambient group (Gamma(2) ambient).
    long locate(const Mat& g) const;
    long locate(const PSL2& g) const { return locate(g.rep()); }

  private:
    SubgroupSpec spec_;
    Ambient ambient_;
    long m_ = 0;
    Perm sig_[2];
    std::vector<Word> rep_words_;
    std::vector<Mat> reps_;
    std::shared_ptr<const detail::CosetLabeler> labeler_;
    std::map<std::string, long> coset_of_;
};

// Index of the projective principal congruence group of level N in the full
// projective modular group: 1, 6, or N^3/2 * prod over p | N of (1 - 1/p^2).
Int index_principal(long N);

// Index of the projective Gamma_0(N): N * prod over p | N of (1 + 1/p).
Int index_gamma_zero(long N);

// Index of the projective principal congruence group of level 2N inside the
// level-two group: 1 for N = 1, 4 for N = 2, mu_N for odd N >= 3, and
// (4/3) mu_N for even N >= 4.
Int index_even_principal_in_gamma2(long N);

enum class IndexFamily { PrincipalInFull, GammaZeroInFull, EvenPrincipalInGamma2 };

Int index_formula(IndexFamily family, long N);

}  // namespace modcurve
