// entwit tests — linear-algebra kernel.
#include <cmath>

#include <entwit/linalg.hpp>

#include "doctest.h"
#include "helpers.hpp"

using namespace entwit;
using testutil::max_abs_diff;
using testutil::random_matrix;
using testutil::random_hermitian;

TEST_SUITE("linalg") {

TEST_CASE("vec stacks columns and unvec restores the shape") {
    Matrix a(2, 2);
    a << 1.0, 3.0, 2.0, 4.0;
    const Matrix v = vec(a);
    REQUIRE(v.rows() == 4);
    REQUIRE(v.cols() == 1);
    CHECK(v(0, 0) == Complex(1.0));
    CHECK(v(1, 0) == Complex(2.0));
    CHECK(v(2, 0) == Complex(3.0));
    CHECK(v(3, 0) == Complex(4.0));
    CHECK(max_abs_diff(unvec(v, 2, 2), a) == 0.0);

    const Matrix r = random_matrix(3, 5, 11);
    CHECK(max_abs_diff(unvec(vec(r), 3, 5), r) == 0.0);
}

TEST_CASE("require_bipartite rejects size mismatches") {
    const Matrix ok = Matrix::Identity(6, 6);
    CHECK_NOTHROW(require_bipartite(ok, {2, 3}, "test"));
    CHECK_THROWS_AS(require_bipartite(ok, {2, 2}, "test"), DimensionError);
    CHECK_THROWS_AS(require_bipartite(Matrix::Zero(6, 4), {2, 3}, "test"), DimensionError);
}

TEST_CASE("realign of the 4x4 identity") {
    const Matrix r = realign(Matrix::Identity(4, 4), {2, 2});
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected(0, 3) = 1.0;
    expected(3, 0) = 1.0;
    expected(3, 3) = 1.0;
    CHECK(max_abs_diff(r, expected) == 0.0);
}

TEST_CASE("realign fixes the swap operator") {
    Matrix v = Matrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v(i * 2 + j, j * 2 + i) = 1.0;
    CHECK(max_abs_diff(realign(v, {2, 2}), v) == 0.0);
}

TEST_CASE("realign factorizes Kronecker products as vec outer products") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 4}}) {
        const Matrix a = random_matrix(m, m, 100 + m + 10 * n);
        const Matrix b = random_matrix(n, n, 200 + m + 10 * n);
        const Matrix r = realign(kron(a, b), {m, n});
        REQUIRE(r.rows() == m * m);
        REQUIRE(r.cols() == n * n);
        CHECK(max_abs_diff(r, vec(a) * vec(b).transpose()) == 0.0);
    }
}

TEST_CASE("realign_inverse is the exact inverse permutation") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
        const Matrix z = random_matrix(m * n, m * n, 7 * m + n);
        CHECK(max_abs_diff(realign_inverse(realign(z, {m, n}), {m, n}), z) == 0.0);
    }
}

TEST_CASE("partial transposes: involutions, composition, Kronecker action") {
    const BipartiteDims dims{2, 3};
    const Matrix z = random_matrix(6, 6, 42);
    CHECK(max_abs_diff(partial_transpose_A(partial_transpose_A(z, dims), dims), z) == 0.0);
    CHECK(max_abs_diff(partial_transpose_B(partial_transpose_B(z, dims), dims), z) == 0.0);
    // T_A followed by T_B is the full transpose.
    CHECK(max_abs_diff(partial_transpose_B(partial_transpose_A(z, dims), dims),
                       z.transpose()) == 0.0);

    const Matrix a = random_matrix(2, 2, 1);
    const Matrix b = random_matrix(3, 3, 2);
    CHECK(max_abs_diff(partial_transpose_A(kron(a, b), dims), kron(a.transpose(), b)) == 0.0);
    CHECK(max_abs_diff(partial_transpose_B(kron(a, b), dims), kron(a, b.transpose())) == 0.0);

    // Trace and Hermiticity are preserved.
    const Matrix h = random_hermitian(6, 3);
    const Matrix hpt = partial_transpose_A(h, dims);
    CHECK(std::abs((hpt.trace() - h.trace()).real()) == 0.0);
    CHECK(hermiticity_defect(hpt) < 1e-15);
}

TEST_CASE("trace norm on known matrices") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = -2.0;
    d(2, 2) = 3.0;
    CHECK(trace_norm(d) == doctest::Approx(6.0).epsilon(1e-14));

    Matrix j(2, 2);  // singular values (1±√5)/2 → sum √5
    j << 1.0, 1.0, 0.0, 1.0;
    CHECK(trace_norm(j) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));

    CHECK(trace_norm(Matrix::Identity(5, 5)) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(trace_norm(Matrix::Zero(3, 4)) == 0.0);
}

TEST_CASE("svd: reconstruction, orthonormality, ordering, phase convention") {
    for (auto [rows, cols] : {std::pair{4, 4}, std::pair{4, 9}, std::pair{9, 4}}) {
        const Matrix g = random_matrix(rows, cols, 13 * rows + cols);
        const SvdResult d = svd(g);
        const int q = std::min(rows, cols);
        REQUIRE(d.U.cols() == q);
        REQUIRE(d.V.cols() == q);
        REQUIRE(d.S.size() == q);

        CHECK(max_abs_diff(d.U * d.S.asDiagonal() * d.V.adjoint(), g) < 1e-12);
        CHECK(max_abs_diff(d.U.adjoint() * d.U, Matrix::Identity(q, q)) < 1e-12);
        CHECK(max_abs_diff(d.V.adjoint() * d.V, Matrix::Identity(q, q)) < 1e-12);
        for (int k = 0; k < q; ++k) {
            CHECK(d.S(k) >= 0.0);
            if (k > 0) CHECK(d.S(k - 1) >= d.S(k));
            // Phase convention: dominant entry of each U column is real positive.
            int imax = 0;
            d.U.col(k).cwiseAbs().maxCoeff(&imax);
            CHECK(std::abs(d.U(imax, k).imag()) < 1e-12);
            CHECK(d.U(imax, k).real() > 0.0);
        }
    }
}

TEST_CASE("svd is deterministic") {
    const Matrix g = random_matrix(5, 7, 77);
    const SvdResult d1 = svd(g);
    const SvdResult d2 = svd(g);
    CHECK(max_abs_diff(d1.U, d2.U) == 0.0);
    CHECK(max_abs_diff(d1.V, d2.V) == 0.0);
    CHECK((d1.S - d2.S).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hermiticity defect is relative and hermitize symmetrizes") {
    CHECK(hermiticity_defect(random_hermitian(4, 5)) == 0.0);

    Matrix n(2, 2);
    n << 0.0, 1.0, 0.0, 0.0;
    CHECK(hermiticity_defect(n) == doctest::Approx(1.0).epsilon(1e-15));
    // Relative normalization: scaling the matrix does not change the defect.
    CHECK(hermiticity_defect(1e6 * n) == doctest::Approx(1.0).epsilon(1e-15));

    const Matrix g = random_matrix(4, 4, 9);
    const Matrix h = hermitize(g);
    CHECK(hermiticity_defect(h) < 1e-15);
    CHECK(max_abs_diff(h, 0.5 * (g + g.adjoint())) == 0.0);
}

TEST_CASE("eigenvalue helpers on Hermitian input, rejection otherwise") {
    Matrix sx(2, 2);  // eigenvalues ±1
    sx << 0.0, 1.0, 1.0, 0.0;
    CHECK(min_eigenvalue(sx) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(max_eigenvalue(sx) == doctest::Approx(1.0).epsilon(1e-14));

    const Eigen::VectorXd ev = eigenvalues(sx);
    REQUIRE(ev.size() == 2);
    CHECK(ev(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ev(1) == doctest::Approx(1.0).epsilon(1e-14));

    Matrix bad(2, 2);
    bad << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(min_eigenvalue(bad), InvariantError);
    CHECK_THROWS_AS(max_eigenvalue(bad), InvariantError);
    CHECK_THROWS_AS(eigenvalues(bad), InvariantError);
}

TEST_CASE("kron dimensions and entries") {
    Matrix d(2, 2);
    d << 1.0, 0.0, 0.0, 2.0;
    const Matrix k = kron(d, Matrix::Identity(2, 2));
    REQUIRE(k.rows() == 4);
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected(1, 1) = 1.0;
    expected(2, 2) = 2.0;
    expected(3, 3) = 2.0;
    CHECK(max_abs_diff(k, expected) == 0.0);

    const Matrix a = random_matrix(2, 3, 1);
    const Matrix b = random_matrix(3, 2, 2);
    const Matrix ab = kron(a, b);
    REQUIRE(ab.rows() == 6);
    REQUIRE(ab.cols() == 6);
    CHECK(ab(4, 3) == a(1, 1) * b(1, 1));  // block (1,1), inner entry (1,1)
}

TEST_CASE("maximally entangled projector") {
    const Matrix p2 = max_entangled_projector(2);
    CHECK(p2(0, 0) == Complex(0.5));
    CHECK(p2(0, 3) == Complex(0.5));
    CHECK(p2(3, 0) == Complex(0.5));
    CHECK(p2(3, 3) == Complex(0.5));
    CHECK(std::abs(p2.trace() - Complex(1.0)) < 1e-15);
    CHECK(max_abs_diff(p2 * p2, p2) < 1e-15);  // projector

    const Matrix p3 = max_entangled_projector(3);
    CHECK(std::abs(p3.trace() - Complex(1.0)) < 1e-15);
    CHECK(max_abs_diff(p3 * p3, p3) < 1e-15);
    CHECK(trace_norm(p3) == doctest::Approx(1.0).epsilon(1e-13));  // rank one
}

} // TEST_SUITE("linalg")
