#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"

using namespace prym;
using namespace prym::testutil;

namespace {

void check_decomposition(const FreeGModule& m, const GModuleDecomposition& d) {
    CHECK(2 * d.r0 + d.r_plus + d.r_minus == m.rank);
    CHECK(abs_val(det(d.adapted_basis)) == 1);
    IntMat expect = canonical_block_sigma(d.r0, d.r_plus, d.r_minus);
    CHECK(inverse_unimodular(d.adapted_basis) * m.sigma * d.adapted_basis == expect);
}

// Brute-force oracle over (Z/m)^rank; feasible for tiny modules only.
bool torsion_prym_bruteforce(const FreeGModule& mod, long n) {
    const long m2 = 2 * n;
    const int r = mod.rank;
    std::vector<long> x(static_cast<size_t>(r), 0);
    std::set<std::vector<long>> lhs, rhs;
    // enumerate all elements of (Z/2n)^r
    auto advance = [&]() {
        for (int i = 0; i < r; ++i) {
            if (++x[static_cast<size_t>(i)] < m2) return true;
            x[static_cast<size_t>(i)] = 0;
        }
        return false;
    };
    IntMat anti = anti_invariants(mod);
    do {
        std::vector<Int> v(x.begin(), x.end());
        // LHS: 2 * (anti-invariant lattice) mod 2n
        std::vector<Int> av(static_cast<size_t>(r), Int(0));
        if (anti.cols() > 0) {
            // x as coefficients for anti columns (first anti.cols() coords)
            std::vector<Int> coeff(v.begin(), v.begin() + anti.cols());
            av = mat_vec(anti, coeff);
        }
        std::vector<long> key(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i)
            key[static_cast<size_t>(i)] =
                static_cast<long>(((av[static_cast<size_t>(i)] * 2) % m2 + m2) % m2);
        lhs.insert(key);
        // RHS: n-torsion of the image of (sigma - 1)
        std::vector<Int> img = mat_vec(mod.sigma, v);
        for (int i = 0; i < r; ++i) img[static_cast<size_t>(i)] -= v[static_cast<size_t>(i)];
        bool tors = true;
        std::vector<long> ikey(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) {
            Int e = ((img[static_cast<size_t>(i)] % m2) + m2) % m2;
            if ((e * n) % m2 != 0) tors = false;
            ikey[static_cast<size_t>(i)] = static_cast<long>(e);
        }
        if (tors) rhs.insert(ikey);
    } while (advance());
    return lhs == rhs;
}

} // namespace

TEST_CASE("decompose on pinned examples") {
    FreeGModule swap(2, IntMat::from_rows({{0, 1}, {1, 0}}));
    GModuleDecomposition d = decompose(swap);
    CHECK(d.r0 == 1);
    CHECK(d.r_plus == 0);
    CHECK(d.r_minus == 0);
    check_decomposition(swap, d);

    FreeGModule triv(3, IntMat::identity(3));
    GModuleDecomposition d2 = decompose(triv);
    CHECK(d2.r0 == 0);
    CHECK(d2.r_plus == 3);
    CHECK(d2.r_minus == 0);

    FreeGModule neg(2, -IntMat::identity(2));
    GModuleDecomposition d3 = decompose(neg);
    CHECK(d3.r0 == 0);
    CHECK(d3.r_plus == 0);
    CHECK(d3.r_minus == 2);
}

TEST_CASE("decompose rejects non-involutions") {
    CHECK_THROWS_AS(FreeGModule(2, IntMat::from_rows({{1, 1}, {0, 1}})), InputError);
}

TEST_CASE("decompose handles the zero module and larger ranks") {
    FreeGModule zero(0, IntMat(0, 0));
    GModuleDecomposition d0 = decompose(zero);
    CHECK(d0.r0 == 0);
    CHECK(d0.r_plus == 0);
    CHECK(d0.r_minus == 0);

    Rng rng(121212);
    for (int it = 0; it < 10; ++it) {
        FreeGModule m = random_involution(rng, 4, 2, 2); // rank 12
        GModuleDecomposition d = decompose(m);
        CHECK(d.r0 == 4);
        CHECK(d.r_plus == 2);
        CHECK(d.r_minus == 2);
        check_decomposition(m, d);
    }
}

TEST_CASE("decompose recovers hidden block forms") {
    Rng rng(20240);
    FreeGModule m = random_involution(rng, 2, 1, 1);
    GModuleDecomposition d = decompose(m);
    CHECK(d.r0 == 2);
    CHECK(d.r_plus == 1);
    CHECK(d.r_minus == 1);
    check_decomposition(m, d);
}

TEST_CASE("decompose agrees with the cohomology computation on random involutions") {
    Rng rng(909);
    for (int it = 0; it < 60; ++it) {
        int r0 = static_cast<int>(rand_range(rng, 0, 3));
        int rp = static_cast<int>(rand_range(rng, 0, 3));
        int rm = static_cast<int>(rand_range(rng, 0, 3));
        if (2 * r0 + rp + rm == 0) continue;
        FreeGModule m = random_involution(rng, r0, rp, rm);
        GModuleDecomposition d = decompose(m);
        CHECK(d.r0 == r0);
        CHECK(d.r_plus == rp);
        CHECK(d.r_minus == rm);
        check_decomposition(m, d);
        // independent route: cohomology counts the non-regular summands
        CHECK(group_cohomology(m, 1) == FinAbGroup::two_torsion(rm));
        CHECK(group_cohomology(m, 2) == FinAbGroup::two_torsion(rp));
        CHECK(group_cohomology(m, 0) == FinAbGroup::free_of_rank(r0 + rp));
    }
}

TEST_CASE("group cohomology on pinned modules") {
    FreeGModule zg(2, IntMat::from_rows({{0, 1}, {1, 0}}));
    CHECK(group_cohomology(zg, 1).is_trivial());
    FreeGModule zminus(1, IntMat::from_rows({{-1}}));
    CHECK(group_cohomology(zminus, 1) == FinAbGroup::cyclic(2));
    FreeGModule zplus(1, IntMat::from_rows({{1}}));
    CHECK(group_cohomology(zplus, 2) == FinAbGroup::cyclic(2));
    // Z[G]^r0 + Z_+^14 has H^2 = (Z/2)^14
    FreeGModule big = FreeGModule::canonical(1, 14, 0);
    CHECK(group_cohomology(big, 2) == FinAbGroup::two_torsion(14));
}

TEST_CASE("group cohomology has period 2 above degree zero") {
    Rng rng(110);
    for (int it = 0; it < 20; ++it) {
        FreeGModule m = random_involution(rng, static_cast<int>(rand_range(rng, 0, 2)),
                                          static_cast<int>(rand_range(rng, 0, 2)),
                                          static_cast<int>(rand_range(rng, 0, 2)));
        if (m.rank == 0) continue;
        CHECK(group_cohomology(m, 1) == group_cohomology(m, 3));
        CHECK(group_cohomology(m, 2) == group_cohomology(m, 4));
    }
}

TEST_CASE("finite module cohomology") {
    // Z/5 with sigma = -1: odd order, positive-degree cohomology vanishes
    FiniteGModule odd(FinAbGroup::cyclic(5), IntMat::from_rows({{4}}));
    CHECK(group_cohomology(odd, 0).is_trivial());
    CHECK(group_cohomology(odd, 1).is_trivial());
    CHECK(group_cohomology(odd, 2).is_trivial());

    // Z/4 with sigma = -1: H^0 = Z/2, H^1 = Z/2
    FiniteGModule z4(FinAbGroup::cyclic(4), IntMat::from_rows({{3}}));
    CHECK(group_cohomology(z4, 0) == FinAbGroup::cyclic(2));
    CHECK(group_cohomology(z4, 1) == FinAbGroup::cyclic(2));

    CHECK_THROWS_AS(FiniteGModule(FinAbGroup::cyclic(5), IntMat::from_rows({{2}})), InputError);
}

TEST_CASE("finite modules of odd order have vanishing positive cohomology") {
    Rng rng(321);
    for (int it = 0; it < 30; ++it) {
        long ord = 2 * rand_range(rng, 1, 12) + 1;
        // sigma = multiplication by s with s^2 = 1 mod ord; use s = ord - 1
        FiniteGModule m(FinAbGroup::cyclic(ord), IntMat::from_rows({{ord - 1}}));
        CHECK(group_cohomology(m, 1).is_trivial());
        CHECK(group_cohomology(m, 2).is_trivial());
    }
}

TEST_CASE("prym part on pinned modules") {
    FreeGModule swap(2, IntMat::from_rows({{0, 1}, {1, 0}}));
    CHECK(prym_part(swap) == IntMat::from_rows({{1}, {-1}}));
    FreeGModule triv(2, IntMat::identity(2));
    CHECK(prym_part(triv).cols() == 0);
    FreeGModule neg(2, -IntMat::identity(2));
    IntMat pr = prym_part(neg);
    CHECK(lattice_equal(pr, IntMat::identity(2) * Int(2)));
    CHECK(subquotient(IntMat::identity(2), pr).order() == 4);
}

TEST_CASE("prym part properties") {
    Rng rng(606);
    for (int it = 0; it < 40; ++it) {
        int r0 = static_cast<int>(rand_range(rng, 0, 2));
        int rp = static_cast<int>(rand_range(rng, 0, 2));
        int rm = static_cast<int>(rand_range(rng, 0, 2));
        if (2 * r0 + rp + rm == 0) continue;
        FreeGModule m = random_involution(rng, r0, rp, rm);
        IntMat pr = prym_part(m);
        IntMat anti = anti_invariants(m);
        CHECK(pr.cols() == r0 + rm);
        CHECK(lattice_subset(pr, anti));
        if (anti.cols() > 0)
            CHECK(subquotient(anti, pr) == FinAbGroup::two_torsion(rm));
    }
}

TEST_CASE("invariants and anti-invariants") {
    FreeGModule swap(2, IntMat::from_rows({{0, 1}, {1, 0}}));
    CHECK(invariants(swap) == IntMat::from_rows({{1}, {1}}));
    CHECK(anti_invariants(swap) == IntMat::from_rows({{1}, {-1}}));
    FreeGModule triv(2, IntMat::identity(2));
    CHECK(invariants(triv) == IntMat::identity(2));
    CHECK(anti_invariants(triv).cols() == 0);
}

TEST_CASE("index of invariants + anti-invariants is 2^r0") {
    Rng rng(70707);
    for (int it = 0; it < 30; ++it) {
        int r0 = static_cast<int>(rand_range(rng, 0, 3));
        int rp = static_cast<int>(rand_range(rng, 0, 2));
        int rm = static_cast<int>(rand_range(rng, 0, 2));
        if (2 * r0 + rp + rm == 0) continue;
        FreeGModule m = random_involution(rng, r0, rp, rm);
        IntMat sum = lattice_sum(invariants(m), anti_invariants(m));
        FinAbGroup q = subquotient(IntMat::identity(m.rank), sum);
        CHECK(q.order() == pow_int(2, static_cast<unsigned long>(r0)));
    }
}

TEST_CASE("torsion prym check against brute force on tiny modules") {
    FreeGModule zminus(1, IntMat::from_rows({{-1}}));
    Report r1 = torsion_prym_check(zminus, 4);
    CHECK(r1.verdict());
    CHECK(torsion_prym_bruteforce(zminus, 4));
    CHECK(r1.find("lhs")->value == "Z/4"); // both sides are all of (1/4)Z/Z

    FreeGModule zplus(1, IntMat::from_rows({{1}}));
    Report r2 = torsion_prym_check(zplus, 6);
    CHECK(r2.verdict());
    CHECK(r2.find("lhs")->value == "0");
    CHECK(torsion_prym_bruteforce(zplus, 6));

    FreeGModule zg(2, IntMat::from_rows({{0, 1}, {1, 0}}));
    CHECK(torsion_prym_check(zg, 6).verdict());
    CHECK(torsion_prym_bruteforce(zg, 6));
}

TEST_CASE("torsion prym check across random modules and levels") {
    Rng rng(515);
    for (int it = 0; it < 30; ++it) {
        FreeGModule m = random_involution(rng, static_cast<int>(rand_range(rng, 0, 2)),
                                          static_cast<int>(rand_range(rng, 0, 2)),
                                          static_cast<int>(rand_range(rng, 0, 2)));
        if (m.rank == 0) continue;
        for (long n = 2; n <= 12; ++n) CHECK(torsion_prym_check(m, n).verdict());
    }
    CHECK_THROWS_AS(torsion_prym_check(FreeGModule(1, IntMat::identity(1)), 1), InputError);
}
