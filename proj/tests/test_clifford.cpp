#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "krphase/clifford.hpp"

using namespace krphase;

namespace {

// Random element of the algebra span: a complex combination of generator
// products, one term per subset mask.
Matrix random_algebra_element(const CliffordRep& rep, std::mt19937& rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const int n = rep.num_generators();
    Matrix out = Matrix::Zero(rep.dim, rep.dim);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Matrix term = Matrix::Identity(rep.dim, rep.dim);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) term = term * rep.gamma(i);
        out += Complex(coef(rng), coef(rng)) * term;
    }
    return out;
}

}  // namespace

TEST_CASE("build_rep rejects the scalar algebra") {
    REQUIRE_THROWS_AS(build_rep(0, 0), Error);
}

TEST_CASE("build_rep(0,1): one imaginary generator, diagonal parity grading") {
    const CliffordRep rep = build_rep(0, 1);
    REQUIRE(rep.dim == 2);
    REQUIRE(rep.num_generators() == 1);
    CHECK((rep.gamma(0) - pauli_y()).norm() < 1e-15);
    CHECK((rep.grading - pauli_z()).norm() < 1e-15);
    CHECK((rep.real(rep.gamma(0)) + rep.gamma(0)).norm() < 1e-12);
}

TEST_CASE("build_rep(1,0): one real generator") {
    const CliffordRep rep = build_rep(1, 0);
    REQUIRE(rep.dim == 2);
    CHECK((rep.real(rep.gamma(0)) - rep.gamma(0)).norm() < 1e-12);
    CHECK(check_relations(rep).pass());
}

TEST_CASE("build_rep(1,2): dim 4, anticommutators and squares exact") {
    const CliffordRep rep = build_rep(1, 2);
    REQUIRE(rep.dim == 4);
    const Matrix id = Matrix::Identity(4, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Matrix anti = rep.gamma(i) * rep.gamma(j) + rep.gamma(j) * rep.gamma(i);
            CHECK((anti - (i == j ? 2.0 : 0.0) * id).norm() < 1e-12);
        }
}

TEST_CASE("dimension is 2^ceil((a+b)/2)") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            if (a + b == 0) continue;
            const CliffordRep rep = build_rep(a, b);
            CHECK(rep.dim == (Eigen::Index{1} << ((a + b + 1) / 2)));
        }
}

TEST_CASE("apply_antiunitary basics") {
    const AntiUnitary id2 = AntiUnitary::identity(2);
    Matrix real_m(2, 2);
    real_m << 1, 2, 3, 4;
    CHECK((apply_antiunitary(id2, real_m) - real_m).norm() < 1e-15);

    const Matrix i_id = kImag * Matrix::Identity(2, 2);
    CHECK((apply_antiunitary(id2, i_id) + i_id).norm() < 1e-15);

    const CliffordRep rep = build_rep(0, 1);
    CHECK((apply_antiunitary(rep.real_structure, rep.gamma(0)) + rep.gamma(0)).norm() <
          1e-12);

    Matrix wrong(3, 3);
    wrong.setZero();
    REQUIRE_THROWS_AS(apply_antiunitary(id2, wrong), DimensionError);
}

TEST_CASE("extend_generators") {
    const CliffordRep base = build_rep(1, 1);

    SECTION("identity case") {
        const ExtendedRep ext = extend_generators(base, 0);
        CHECK(ext.rep.a == 1);
        CHECK(ext.rep.b == 1);
        CHECK(ext.index_map == std::vector<int>{0, 1});
        CHECK((ext.rep.gamma(0) - base.gamma(0)).norm() < 1e-15);
    }

    SECTION("one extra generator") {
        const ExtendedRep ext = extend_generators(base, 1);
        CHECK(ext.rep.a == 1);
        CHECK(ext.rep.b == 2);
        const Matrix id = Matrix::Identity(ext.rep.dim, ext.rep.dim);
        const Matrix g0 = ext.rep.gamma(ext.index_map[0]);
        const Matrix g1 = ext.rep.gamma(ext.index_map[1]);
        CHECK((g0 * g1 + g1 * g0).norm() < 1e-12);
        CHECK((g0 * g0 - id).norm() < 1e-12);
        CHECK((g1 * g1 - id).norm() < 1e-12);
        // embedded generators keep their reality signs
        CHECK((ext.rep.real(g0) - g0).norm() < 1e-12);
        CHECK((ext.rep.real(g1) + g1).norm() < 1e-12);
    }

    SECTION("two extra generators from (1,0)") {
        const ExtendedRep ext = extend_generators(build_rep(1, 0), 2);
        CHECK(ext.rep.dim == 4);
        CHECK(check_relations(ext.rep).pass());
    }

    SECTION("extra_b > 2 rejected") {
        REQUIRE_THROWS_AS(extend_generators(base, 3), Error);
    }
}

TEST_CASE("check_relations diagnoses a corrupted representation") {
    CHECK(check_relations(build_rep(1, 3)).pass());
    CHECK(check_relations(build_rep(3, 0)).pass());

    CliffordRep broken = build_rep(1, 1);
    broken.gammas[0] *= 2.0;
    const RelationReport rpt = check_relations(broken);
    CHECK_FALSE(rpt.pass());
    CHECK(rpt.anticommutation > 1.0);
}

TEST_CASE("all algebras with a+b <= 6 satisfy every relation") {
    for (int n = 1; n <= 6; ++n)
        for (int a = 0; a <= n; ++a) {
            const int b = n - a;
            const CliffordRep rep = build_rep(a, b);
            const RelationReport rpt = check_relations(rep);
            INFO("a=" << a << " b=" << b << " max residual " << rpt.max());
            CHECK(rpt.pass(1e-12));
        }
}

TEST_CASE("grading reality sign is forced: -1 iff a+b even and a-b = 2 mod 4") {
    for (int n = 1; n <= 6; ++n)
        for (int a = 0; a <= n; ++a) {
            const int b = n - a;
            const CliffordRep rep = build_rep(a, b);
            const int expected = (n % 2 == 0 && ((a - b) % 4 + 4) % 4 == 2) ? -1 : +1;
            INFO("a=" << a << " b=" << b);
            CHECK(rep.grading_reality == expected);
        }
}

TEST_CASE("parity bookkeeping: products of generators are even/odd by count") {
    for (int n = 2; n <= 4; ++n)
        for (int a = 0; a <= n; ++a) {
            const CliffordRep rep = build_rep(a, n - a);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Matrix prod = rep.gamma(i) * rep.gamma(j);
                    CHECK((rep.grading * prod - prod * rep.grading).norm() < 1e-12);
                    for (int l = 0; l < n; ++l) {
                        const Matrix triple = prod * rep.gamma(l);
                        CHECK((rep.grading * triple + triple * rep.grading).norm() < 1e-12);
                    }
                }
        }
}

TEST_CASE("R is a ring map composed with conjugation") {
    std::mt19937 rng(7);
    for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{0, 3}}) {
        const CliffordRep rep = build_rep(a, b);
        for (int t = 0; t < 5; ++t) {
            const Matrix m = random_algebra_element(rep, rng);
            const Matrix n = random_algebra_element(rep, rng);
            CHECK((rep.real(m * n) - rep.real(m) * rep.real(n)).norm() < 1e-10);
        }
    }
}

TEST_CASE("real structure is involutive on matrices for both signs") {
    std::mt19937 rng(11);
    for (auto [a, b] : {std::pair{2, 0}, std::pair{0, 2}, std::pair{1, 3}, std::pair{3, 0}}) {
        const CliffordRep rep = build_rep(a, b);
        const Matrix m = random_algebra_element(rep, rng);
        CHECK((rep.real(rep.real(m)) - m).norm() < 1e-10);
        CHECK((rep.real_structure.squared() -
               double(rep.real_structure_sign) * Matrix::Identity(rep.dim, rep.dim))
                  .norm() < 1e-12);
    }
}
