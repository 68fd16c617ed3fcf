#include "doctest.h"

#include "diagred/rmatrix.hpp"
#include "diagred/special_elements.hpp"

using namespace diagred;

namespace {
Coeff hd(long s = 0) { return Coeff::hdiff(0, 1, s); }
}  // namespace

TEST_CASE("R entries at rank 2") {
  const Tensor4 r = build_r(2);
  CHECK(r(0, 1, 0, 1) == hd().inverse());
  CHECK(r(0, 1, 1, 0) == (hd() * hd() - Coeff(1)) / (hd() * hd()));
  CHECK(r(1, 0, 1, 0) == -hd().inverse());
  CHECK(r(1, 0, 0, 1) == Coeff(1));
  CHECK(r(0, 0, 0, 0) == Coeff(1));
  CHECK(r(1, 1, 1, 1) == Coeff(1));
  CHECK(r.nonzero_count() == 6);
}

TEST_CASE("T, Psi and Q at rank 2") {
  CHECK(build_t(2)(0, 1, 0, 1) == -hd(-1).inverse());
  CHECK(build_psi(2)(0, 1, 1, 0) == Coeff(1));
  const Diagonal qm = build_q_minus(2);
  CHECK(qm[0] == hd(-1) / hd());
  CHECK(qm[1] == hd(1) / hd());
  CHECK(build_cartan_h(2)[1] == Coeff::var(1) + Coeff(2));
}

TEST_CASE("all tensors respect the sparsity pattern") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(build_r(n).sparsity_ok());
    CHECK(build_t(n).sparsity_ok());
    CHECK(build_s(n).sparsity_ok());
    CHECK(build_psi(n).sparsity_ok());
  }
}

TEST_CASE("partial traces of Psi at rank 2") {
  const Tensor4 psi = build_psi(2);
  CHECK(psi(0, 0, 0, 0) + psi(0, 1, 0, 1) == hd(1) / hd());
  CHECK(psi(0, 0, 0, 0) + psi(1, 0, 1, 0) == q_minus(0, 2));
}

TEST_CASE("Q- weighted trace of R expanded at rank 2") {
  // m = n = 1: Q-_1[-e_1] R^{11}_{11} + Q-_2[-e_1] R^{12}_{12}
  const Tensor4 r = build_r(2);
  const Coeff a = q_minus(0, 2).shifted(-Weight::unit(0));
  const Coeff b = q_minus(1, 2).shifted(-Weight::unit(0)) * r(0, 1, 0, 1);
  CHECK(a == hd(-2) / hd(-1));
  CHECK(b == hd(-1).inverse());
  CHECK(a + b == Coeff(1));
}

TEST_CASE("tensor identities hold for small ranks") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const Report inv = check_involutive(n);
    const Report ybe = check_dybe(n);
    const Report skew = check_skew_inverse(n);
    const Report aux = check_aux_identities(n);
    for (const Report* r : {&inv, &ybe, &skew, &aux}) {
      for (const auto& f : r->failures) MESSAGE(f.identity << " " << f.lhs << " vs " << f.rhs);
      CHECK(r->passed());
      CHECK(r->checks > 0);
    }
  }
}

TEST_CASE("traces of Q up to rank 6") {
  for (int n = 1; n <= 6; ++n) CHECK(check_traces(n).passed());
}

TEST_CASE("parallel run gives the same report") {
  set_worker_count(3);
  const Report par = check_dybe(3);
  set_worker_count(1);
  const Report seq = check_dybe(3);
  CHECK(par.checks == seq.checks);
  CHECK(par.passed());
}
