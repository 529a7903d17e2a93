#include "modcurve/psl2/coset.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "modcurve/arith/ring.hpp"
#include "residues.hpp"

namespace modcurve {

using detail::mod_canonical;

// A labeler maps an ambient-group element to a canonical label of its right
// coset.  Congruence-type specs label by the minimum projective residue over
// the subgroup's image mod N; kernel specs label by the homomorphism image
// (for ambient Gamma(2)) or by the pair (level-two coset, image of the
// level-two part) for ambient Gamma(1).
namespace detail {
struct CosetLabeler {
    virtual ~CosetLabeler() = default;
    virtual std::string label(const Mat& g) const = 0;
};
}  // namespace detail

namespace {

struct CongruenceLabeler final : detail::CosetLabeler {
    long N;
    std::vector<std::array<long, 4>> h_images;  // subgroup image mod N (projective classes)

    std::string label(const Mat& g) const override {
        std::array<long, 4> best{-1, -1, -1, -1};
        bool first = true;
        for (const auto& h : h_images) {
            Mat hm(h[0], h[1], h[2], h[3]);
            auto key = mod_canonical(hm * g, N);
            if (first || key < best) {
                best = key;
                first = false;
            }
        }
        std::string out;
        for (long v : best) out += std::to_string(v) + ",";
        return out;
    }
};

std::string perm_key(const Perm& p) {
    std::string out;
    for (long v : p.images()) out += std::to_string(v) + ",";
    return out;
}

struct KernelGamma2Labeler final : detail::CosetLabeler {
    Gamma2Kernel kernel;

    std::string label(const Mat& g) const override {
        if (!in_gamma2(g)) throw std::domain_error("element outside the level-two ambient group");
        return perm_key(gamma2_hom_image(kernel, PSL2(g)));
    }
};

struct KernelGamma1Labeler final : detail::CosetLabeler {
    Gamma2Kernel kernel;
    // Right transversal of the level-two group in the full group, with a
    // congruence labeler to identify which level-two coset g lies in.
    std::vector<Mat> transversal;
    std::vector<std::string> transversal_labels;
    CongruenceLabeler mod2;

    std::string label(const Mat& g) const override {
        std::string l2 = mod2.label(g);
        for (size_t i = 0; i < transversal.size(); ++i) {
            if (transversal_labels[i] == l2) {
                Mat h = g * transversal[i].inverse();
                return std::to_string(i) + "|" + perm_key(gamma2_hom_image(kernel, PSL2(h)));
            }
        }
        throw std::logic_error("level-two transversal lookup failed");
    }
};

// Enumerate the image of the subgroup in SL(2, Z/N) as projective classes.
std::vector<std::array<long, 4>> subgroup_image_mod(const SubgroupSpec& spec, long N) {
    std::vector<std::array<long, 4>> out;
    std::set<std::array<long, 4>> seen;
    auto add = [&](const Mat& m) {
        auto key = mod_canonical(m, N);
        if (seen.insert(key).second) out.push_back(key);
    };
    if (std::get_if<PrincipalCongruence>(&spec)) {
        add(Mat());
    } else if (std::get_if<GammaZero>(&spec)) {
        for (const Mat& m : detail::upper_triangular_classes(N)) add(m);
    } else if (const auto* j = std::get_if<JoinWithCyclic>(&spec)) {
        Mat w = word_eval_mat(j->extra);
        Mat acc;
        for (;;) {
            auto key = mod_canonical(acc, N);
            if (seen.count(key)) break;
            add(acc);
            acc = acc * w;
        }
    } else {
        throw std::logic_error("kernel specs have no congruence image");
    }
    return out;
}

long spec_level(const SubgroupSpec& spec) {
    if (const auto* pc = std::get_if<PrincipalCongruence>(&spec)) return pc->N;
    if (const auto* gz = std::get_if<GammaZero>(&spec)) return gz->N;
    if (const auto* j = std::get_if<JoinWithCyclic>(&spec)) return j->base.N;
    return 0;
}

}  // namespace

CosetTable::CosetTable(SubgroupSpec spec, Ambient ambient) : spec_(std::move(spec)), ambient_(ambient) {
    validate_spec(spec_);
    if (ambient_ == Ambient::Gamma2 && !contained_in_gamma2(spec_))
        throw std::domain_error("subgroup is not contained in the level-two ambient group");

    const bool kernel = std::holds_alternative<Gamma2Kernel>(spec_);
    if (kernel) {
        const auto& k = std::get<Gamma2Kernel>(spec_);
        if (ambient_ == Ambient::Gamma2) {
            auto lab = std::make_shared<KernelGamma2Labeler>();
            lab->kernel = k;
            labeler_ = lab;
        } else {
            auto lab = std::make_shared<KernelGamma1Labeler>();
            lab->kernel = k;
            lab->mod2.N = 2;
            lab->mod2.h_images = {mod_canonical(Mat(), 2)};
            // Build the level-two transversal by BFS over S, T.
            std::map<std::string, long> seen;
            std::deque<Mat> queue;
            Mat id;
            seen[lab->mod2.label(id)] = 0;
            lab->transversal.push_back(id);
            lab->transversal_labels.push_back(lab->mod2.label(id));
            queue.push_back(id);
            while (!queue.empty()) {
                Mat cur = queue.front();
                queue.pop_front();
                for (const Mat& gen : {mat_S(), mat_T()}) {
                    Mat nxt = cur * gen;
                    std::string l = lab->mod2.label(nxt);
                    if (!seen.count(l)) {
                        seen[l] = static_cast<long>(lab->transversal.size());
                        lab->transversal.push_back(nxt);
                        lab->transversal_labels.push_back(l);
                        queue.push_back(nxt);
                    }
                }
            }
            labeler_ = lab;
        }
    } else {
        long N = spec_level(spec_);
        auto lab = std::make_shared<CongruenceLabeler>();
        lab->N = std::max(N, 1L);
        lab->h_images = subgroup_image_mod(spec_, lab->N);
        labeler_ = lab;
    }

    // Breadth-first enumeration of right cosets.
    const Mat gens[2] = {ambient_ == Ambient::Gamma1 ? mat_S() : mat_A(),
                         ambient_ == Ambient::Gamma1 ? mat_T() : mat_B()};
    const Letter letters[2] = {ambient_ == Ambient::Gamma1 ? Letter::S : Letter::A,
                               ambient_ == Ambient::Gamma1 ? Letter::T : Letter::B};

    std::map<std::string, long> coset_of;
    std::deque<long> queue;
    reps_.push_back(Mat());
    rep_words_.push_back(Word{});
    coset_of[labeler_->label(Mat())] = 0;
    queue.push_back(0);
    std::vector<std::array<long, 2>> action;
    action.push_back({-1, -1});
    while (!queue.empty()) {
        long i = queue.front();
        queue.pop_front();
        for (int gi = 0; gi < 2; ++gi) {
            Mat nxt = reps_[static_cast<size_t>(i)] * gens[gi];
            std::string l = labeler_->label(nxt);
            auto it = coset_of.find(l);
            long j;
            if (it == coset_of.end()) {
                j = static_cast<long>(reps_.size());
                coset_of[l] = j;
                reps_.push_back(nxt);
                Word w = rep_words_[static_cast<size_t>(i)];
                w.push_back({letters[gi], 1});
                rep_words_.push_back(word_reduce(w));
                action.push_back({-1, -1});
                queue.push_back(j);
            } else {
                j = it->second;
            }
            action[static_cast<size_t>(i)][static_cast<size_t>(gi)] = j;
        }
    }
    m_ = static_cast<long>(reps_.size());
    for (int gi = 0; gi < 2; ++gi) {
        std::vector<long> img(static_cast<size_t>(m_));
        for (long i = 0; i < m_; ++i) img[static_cast<size_t>(i)] = action[static_cast<size_t>(i)][static_cast<size_t>(gi)];
        sig_[gi] = Perm(std::move(img));
    }
    coset_of_ = std::move(coset_of);
}

const Perm& CosetTable::sigma(int generator) const {
    if (generator < 0 || generator > 1) throw std::domain_error("generator index must be 0 or 1");
    return sig_[generator];
}

Perm CosetTable::sigma_st() const {
    if (ambient_ != Ambient::Gamma1)
        throw std::domain_error("sigma_st is defined for the full ambient group");
    // Right action of S*T: apply sigma_S first, then sigma_T.
    return sigma_t() * sigma_s();
}

long CosetTable::locate(const Mat& g) const {
    if (g.det() != 1) throw std::domain_error("locate requires determinant 1");
    std::string l = labeler_->label(g);
    auto it = coset_of_.find(l);
    if (it == coset_of_.end()) throw std::domain_error("element outside the ambient group");
    return it->second;
}

Int index_principal(long N) {
    if (N < 1) throw std::domain_error("level must be >= 1");
    if (N == 1) return 1;
    if (N == 2) return 6;
    Int num = int_pow(Int(N), 3);
    Int den(2);
    for (long p = 2; p <= N; ++p) {
        if (N % p) continue;
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        num *= Int(p * p - 1);
        den *= Int(p * p);
    }
    return ring_traits<Int>::divexact(num, den);
}

Int index_gamma_zero(long N) {
    if (N < 1) throw std::domain_error("level must be >= 1");
    Int num(N);
    Int den(1);
    for (long p = 2; p <= N; ++p) {
        if (N % p) continue;
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        num *= Int(p + 1);
        den *= Int(p);
    }
    return ring_traits<Int>::divexact(num, den);
}

Int index_even_principal_in_gamma2(long N) {
    if (N < 1) throw std::domain_error("level must be >= 1");
    if (N == 1) return 1;
    if (N == 2) return 4;
    Int mu = index_principal(N);
    if (N % 2 == 0) return ring_traits<Int>::divexact(Int(4) * mu, Int(3));
    return mu;
}

Int index_formula(IndexFamily family, long N) {
    switch (family) {
        case IndexFamily::PrincipalInFull: return index_principal(N);
        case IndexFamily::GammaZeroInFull: return index_gamma_zero(N);
        case IndexFamily::EvenPrincipalInGamma2: return index_even_principal_in_gamma2(N);
    }
    throw std::domain_error("unknown index family");
}

}  // namespace modcurve
