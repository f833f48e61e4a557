// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "injword/injword.hpp"
#include "oracles.hpp"

using namespace injword;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& why) {
        if (!cond && ok) detail << why;
        ok = ok && cond;
    }
};

SmithForm snf_of(const std::vector<WordPolynomial>& polys, int k) {
    return smith_form(expansion_matrix(polys, enumerate_injections(k - 1, GroundSet::standard(k))));
}

void c1(Verdict& v) {
    const long betti[] = {1, 0, 1, 2, 9, 44, 265, 1854};
    for (int k = 1; k <= 7; ++k) {
        const auto h = homology(inj_complex(GroundSet::standard(k)));
        v.require(h.vanishes_through(k - 2), "homology below the top at k=" + std::to_string(k));
        v.require(h.at(k - 1).betti == betti[k], "top betti at k=" + std::to_string(k));
        v.require(h.torsion_free(), "torsion at k=" + std::to_string(k));
        v.require(Integer(betti[k]) == derangements(k), "derangement count at k=" + std::to_string(k));
    }
    v.require(homology(inj_complex(GroundSet::standard(0))).at(-1).betti == betti[0], "k=0");
    v.detail << "betti(k-1) = 0,1,2,9,44,265,1854 for k=1..7, torsion-free";
}

void c2(Verdict& v) {
    for (int k = 2; k <= 6; ++k) {
        const auto basis = lproduct_basis(k);
        std::vector<WordPolynomial> polys;
        for (const auto& p : basis) {
            polys.push_back(p.expand());
            v.require(inj_boundary(polys.back()).is_zero(), "non-cycle " + p.to_string());
        }
        v.require(Integer(static_cast<long>(basis.size())) == oracle::Z(oracle::derangements_by_enumeration(k)), "size at k=" + std::to_string(k));
        const auto snf = snf_of(polys, k);
        const long top = homology(inj_complex(GroundSet::standard(k))).at(k - 1).betti;
        v.require(snf.rank == top && snf.rank == static_cast<long>(polys.size()), "rank at k=" + std::to_string(k));
        v.require(snf.nontrivial.empty(), "not saturated at k=" + std::to_string(k));
    }
    v.detail << "L-products for k=2..6 are a saturated basis of top homology";
}

void c3(Verdict& v) {
    for (int k = 1; k <= 6; ++k) {
        const auto basis = pbw_basis(k);
        std::vector<WordPolynomial> polys;
        for (const auto& p : basis) polys.push_back(p.expand());
        v.require(Integer(static_cast<long>(basis.size())) == oracle::factorial(k), "size at k=" + std::to_string(k));
        v.require(snf_of(polys, k).unimodular(), "not unimodular at k=" + std::to_string(k));
    }
    const std::vector<std::vector<std::string>> printed{
        {"[1,2]", "12"},
        {"[[1,2],3]", "[[1,3],2]", "1[2,3]", "2[1,3]", "3[1,2]", "123"},
        {"[[[1,2],3],4]", "[[[1,2],4],3]", "[[[1,3],2],4]", "[[[1,3],4],2]", "[[[1,4],2],3]", "[[[1,4],3],2]",
         "[1,2][3,4]", "[1,3][2,4]", "[1,4][2,3]", "1[[2,3],4]", "1[[2,4],3]", "2[[1,3],4]", "2[[1,4],3]",
         "3[[1,2],4]", "3[[1,4],2]", "4[[1,2],3]", "4[[1,3],2]", "12[3,4]", "13[2,4]", "14[2,3]", "23[1,4]",
         "24[1,3]", "34[1,2]", "1234"}};
    for (int k = 2; k <= 4; ++k) {
        std::vector<std::string> got;
        for (const auto& p : pbw_basis(k)) got.push_back(p.to_string());
        v.require(got == printed[static_cast<std::size_t>(k - 2)], "list differs at k=" + std::to_string(k));
    }
    v.detail << "k! unimodular bases for k<=6; k=2,3,4 lists match element for element";
}

void c4(Verdict& v) {
    const auto lhs = egf_exp(lie_series(12));
    v.require(lhs.order() == 12, "series truncated early");
    // e^{-x}/(1-x) has x^n coefficient sum_{j<=n} (-1)^j / j!.
    oracle::Q partial = 0;
    for (int n = 0; n <= 12; ++n) {
        partial += oracle::Q(n % 2 ? -1 : 1, oracle::factorial(n));
        partial.canonicalize();
        v.require(lhs.coefficients()[static_cast<std::size_t>(n)] == partial, "coefficient of x^" + std::to_string(n));
    }
    v.require(lhs == derangement_series(12), "library derangement series");
    v.detail << "exp(L) = e^{-x}/(1-x) through x^12";
}

void c5(Verdict& v) {
    for (int k = 0; k <= 6; ++k) {
        const auto s = GroundSet::standard(k);
        const auto phi = phi_isomorphism(s);
        v.require(is_signed_bijection(phi), "not a signed bijection at k=" + std::to_string(k));
        v.require(is_chain_map(phi, inj_complex(s), inj_plus_complex(s)), "not a chain map at k=" + std::to_string(k));
    }
    v.detail << "Phi is a +-1 chain isomorphism for k<=6";
}

void c6(Verdict& v) {
    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d <= std::min(3, n); ++d) {
            const auto s = GroundSet::standard(n);
            const auto b = inj_d_complex(d, s);
            const auto h = homology(b);
            const int top = n - 1 - d;
            const std::string at = " at |S|=" + std::to_string(n) + ", d=" + std::to_string(d);
            v.require(h.concentrated_in(top), "not concentrated" + at);
            v.require(Integer(h.at(top).betti) == oracle::factorial(n) / oracle::factorial(n - d) * oracle::Z(oracle::derangements_by_enumeration(n - d)),
                      "rank" + at);
            v.require(h.torsion_free(), "torsion" + at);
            const auto a = twisted_inj_complex(SymmetricGroupRep::regular(d), s);
            const auto iso = regular_identification(d, s);
            v.require(a.dims() == b.dims(), "dimensions differ" + at);
            v.require(is_signed_bijection(iso) && is_chain_map(iso, b, a), "no cell-wise isomorphism" + at);
        }
    v.detail << "concentrated with rank |S|!/(|S|-d)! h_{|S|-d}; regular twist is isomorphic cell by cell";
}

void c7(Verdict& v) {
    for (int n = 0; n <= 8; ++n)
        for (int d = 0; d <= 2; ++d) {
            const auto s = GroundSet::standard(n);
            const std::string at = " at |S|=" + std::to_string(n) + ", d=" + std::to_string(d);
            const auto h = homology(inj2_complex(d, s));
            for (int i = -1; 2 * (i + 2) <= n - d; ++i) v.require(h.at(i).is_zero(), "H_" + std::to_string(i) + " nonzero" + at);
            v.require(verify_structure_inj2(d, s).passed, "structure check" + at);
        }
    const int first = first_coequalizer_degree(0, 8);
    v.require(first == 4, "coequalizer for d=0 first holds at k=" + std::to_string(first) + ", expected 4; ");
    v.detail << "vanishing and structure hold for |S|<=8, d<=2";
}

void c8(Verdict& v) {
    auto random_morphism = [](int k, int m) {
        std::vector<Label> pts(static_cast<std::size_t>(m));
        std::iota(pts.begin(), pts.end(), 1);
        std::shuffle(pts.begin(), pts.end(), oracle::rng());
        std::vector<Label> images(pts.begin(), pts.begin() + k);
        std::vector<Block> blocks;
        for (int i = k; i + 1 < m; i += 2) blocks.emplace_back(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(i) + 1]);
        return FIMPlusMorphism(m, images, blocks, oracle::uniform(0, 1) ? 1 : -1);
    };
    for (int t = 0; t < 500; ++t) {
        const int a = oracle::uniform(0, 4);
        const int b = a + 2 * oracle::uniform(0, 1);
        const int c = b + 2 * oracle::uniform(0, 1);
        const int d = c + 2 * oracle::uniform(0, (8 - c) / 2);
        const auto f = random_morphism(a, b), g = random_morphism(b, c), h = random_morphism(c, d);
        v.require(fimplus_compose(h, fimplus_compose(g, f)) == fimplus_compose(fimplus_compose(h, g), f),
                  "associativity fails for " + f.to_string() + ", " + g.to_string() + ", " + h.to_string());
    }
    for (int d = 0; d <= 3; ++d)
        for (int k = 0; k <= 8; ++k) {
            // Brute force: words of length d on [k], times perfect matchings of the rest.
            oracle::Z brute = 0;
            if (k >= d)
                for (const auto& w : enumerate_injections(d - 1, GroundSet::standard(k)))
                    brute += oracle::matchings_count(k - static_cast<int>(w.size()));
            v.require(free_fimplus_dim(d, k) == brute, "dimension at d=" + std::to_string(d) + ", k=" + std::to_string(k));
        }
    v.detail << "500 random triples associate; dimensions match enumeration for d<=3, k<=8";
}

void c9(Verdict& v) {
    auto P = [](std::vector<int> p) { return Partition(std::move(p)); };
    const std::vector<std::pair<int, std::vector<Partition>>> printed{
        {1, {P({1})}},
        {3, {P({2, 1})}},
        {5, {P({4, 1}), P({3, 1, 1}), P({3, 2})}},
        {7, {P({5, 1, 1}), P({4, 3}), P({4, 2, 1}), P({4, 1, 1, 1}), P({3, 3, 1})}},
        {9, {P({6, 1, 1, 1}), P({5, 3, 1}), P({5, 2, 1, 1}), P({5, 1, 1, 1, 1}), P({4, 4, 1}), P({4, 3, 2}), P({4, 3, 1, 1})}}};
    const auto triv = irreducible(P({1}));
    for (const auto& [k, parts] : printed) {
        SchurExpansion want;
        want.n = k;
        for (const auto& p : parts) want.add(p, 1);
        const auto got = decompose_free_fimplus(triv, k);
        v.require(got == want, "k=" + std::to_string(k) + " gives " + got.to_string() + " against printed " + want.to_string() + "; ");
    }
    for (int n = 2; n <= 10; n += 2) {
        v.require(verify_m0_decomposition(n).passed, "M(0) decomposition at " + std::to_string(n));
        v.require(static_cast<long>(d_set(n).size()) == oracle::strict_partitions(n / 2), "|D_" + std::to_string(n) + "|");
    }
    v.detail << "M(0) decompositions and |D_2k| agree for 2k<=10";
}

void c10(Verdict& v) {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 8; ++k) {
            const auto poly = oracle::config_poincare(n - 1, k);
            for (int i = 0; i <= (n - 1) * k; ++i) {
                const oracle::Z want = i < static_cast<int>(poly.size()) ? poly[static_cast<std::size_t>(i)] : 0;
                v.require(config_betti(n, k, i) == want, "betti n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i));
            }
        }
    for (int k = 0; k <= 5; ++k) v.require(w_module_dim(2, 0, 2 * k) == oracle::matchings_count(2 * k), "W dimension at 2k=" + std::to_string(2 * k));
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int i = 1; i <= 4; ++i) {
                const int bound = i * (d * d + d) / (n - 1);
                bool witness = false;
                for (int k = 0; k <= bound; ++k) witness = witness || count_secondary_generators(n, d, i, k) != 0;
                for (int k = bound + 1; k <= bound + 12; ++k)
                    v.require(count_secondary_generators(n, d, i, k) == 0, "nonzero count beyond the bound");
                if (i % (n - 1) == 0) v.require(witness, "no witness below the bound");
            }
    v.detail << "Poincare polynomials, W dimensions and secondary vanishing all agree";
}

void c11(Verdict& v) {
    v.require(iterate_bound_matrix(e2_start(), 1) == BoundVector{10, 18, 14, 22}, "one step from (4,3,6,4)");
    // r - 1 steps from the E2 start bound E_{r+1}, which meets the (1+sqrt2)^{r-2} vector.
    std::array<oracle::Z, 5> w = oracle::bound_matrix_step({4, 3, 6, 4, 1});
    for (int r = 2; r <= 20; ++r) {
        const auto b = iterate_bound_matrix(e2_start(), r - 1);
        v.require(b == BoundVector{w[0], w[1], w[2], w[3]}, "matrix oracle at r=" + std::to_string(r));
        v.require(dominated_by(b, silver_bound_vector(r)), "not dominated at r=" + std::to_string(r));
        w = oracle::bound_matrix_step(w);
    }
    const auto cm = closed_manifold_bounds(2);
    v.require(cm.gen == RootTwo(63) && cm.rel == RootTwo(84), "closed manifold bounds at p=2");
    v.detail << "(10,18,14,22); dominated for 2<=r<=20; p=2 gives (63,84)";
}

void c12(Verdict& v) {
    const auto gen = FBData::dims({{2, 5}, {3, 2}});
    for (int k = 0; k <= 20; ++k)
        v.require(free_fi_dim(gen, k) == 5 * oracle::binomial(k, 2) + 2 * oracle::binomial(k, 3), "k=" + std::to_string(k));
    v.detail << "5 C(k,2) + 2 C(k,3) for k<=20";
}

}  // namespace

int main() {
    const std::vector<std::function<void(Verdict&)>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i](v);
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << v.detail.str() << " (" << std::fixed
                  << std::setprecision(2) << secs << " s)" << std::endl;
        failed += v.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
