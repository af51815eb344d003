// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "etahecke/hecke.hpp"

using namespace etahecke;

TEST_CASE("QMatrix arithmetic") {
  QMatrix a(2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  QMatrix b = QMatrix::identity(2);
  QMatrix c = a * b;
  CHECK(c.at(1, 0) == 3);
  CHECK(c.trace() == 5);
  QMatrix d = a * a;
  CHECK(d.at(0, 0) == 7);
  CHECK(d.at(0, 1) == 10);
  CHECK(d.at(1, 1) == 22);
  QMatrix e = Rat(1, 2) * a - b;
  CHECK(e.at(0, 0) == Rat(-1, 2));
  CHECK(e.at(1, 1) == 1);
}

TEST_CASE("T_{p^2} coefficient formula on a concrete series") {
  EtaSpaceSpec spec{EtaFamily::Eta24, 11, 0};
  EchelonBasis basis = eta_space_basis(spec, 11 * 25 * 3);
  const FourierSeries& f = basis.elements[0];
  FourierSeries g = t_psq_half(f, spec, 5);
  // b(n) = a(25 n) + (12|5)((-1)^5 n|5) 5^4 a(n) + 5^9 a(n/25).
  const Int p4 = int_pow(5, 4), p9 = int_pow(5, 9);
  for (int64_t n = 0; n <= g.nmax(); ++n) {
    Rat expect = f.coeff(25 * n);
    int chi = kronecker(12, 5) * kronecker(-n, 5);
    if (chi != 0) expect += Rat(chi) * Rat(p4) * f.coeff(n);
    if (n % 25 == 0) expect += Rat(p9) * f.coeff(n / 25);
    CHECK(g.coeff(n) == expect);
  }
  CHECK_THROWS_AS(t_psq_half(f, spec, 4), std::invalid_argument);
  CHECK_THROWS_AS(t_psq_half(f, spec, 3), std::invalid_argument);  // divides the level
}

TEST_CASE("operator_matrix rejects images outside the space") {
  EtaSpaceSpec spec{EtaFamily::Eta24, 11, 0};
  EchelonBasis basis = eta_space_basis(spec, 600);
  // A valid image: any scalar multiple of the basis vector.
  FourierSeries good = basis.elements[0].truncated(300);
  good *= Rat(7);
  QMatrix m = operator_matrix(basis, {good});
  CHECK(m.at(0, 0) == 7);
  // Perturb one coefficient off the pivot: membership check must fire.
  FourierSeries bad = basis.elements[0].truncated(300);
  bad.set_coeff(11 + 24, bad.coeff(11 + 24) + 1);
  CHECK_THROWS_AS(operator_matrix(basis, {bad}), std::logic_error);
}

TEST_CASE("Hecke matrices: precision guard and prime-power recursion") {
  EtaSpaceSpec spec{EtaFamily::Eta24, 11, 0};
  EchelonBasis small = eta_space_basis(spec, 11 * 24);
  CHECK_THROWS_AS(hecke_matrix_T_psq(small, 5), insufficient_precision);

  EchelonBasis basis = eta_space_basis(spec, 11 * 5 * 5 * 5 * 5);
  // T_{25^2} = T_{5^2}^2 - 5^9 Id on the eigenline.
  Rat l5 = hecke_matrix_T_psq(basis, 5).trace();
  Rat l25 = hecke_matrix_T_nsq(basis, 25).trace();
  CHECK(l25 == l5 * l5 - Rat(int_pow(5, 9)));
  CHECK(hecke_matrix_T_nsq(basis, 1).trace() == 1);
}

TEST_CASE("multiplicativity of T_{n^2} on one-dimensional spaces") {
  EtaSpaceSpec spec{EtaFamily::Eta24, 5, 6};  // k = 8, dim 1
  EchelonBasis basis = eta_space_basis(spec, 5 * 35 * 35);
  Rat l5 = hecke_matrix_T_nsq(basis, 5).trace();
  Rat l7 = hecke_matrix_T_nsq(basis, 7).trace();
  Rat l35 = hecke_matrix_T_nsq(basis, 35).trace();
  CHECK(l35 == l5 * l7);
}

TEST_CASE("level-1 integral-weight oracle gives tau and dimensions") {
  CHECK(oracle_trace_level1(12, 1) == 1);
  CHECK(oracle_trace_level1(12, 2) == -24);
  CHECK(oracle_trace_level1(12, 5) == 4830);
  CHECK(oracle_trace_level1(12, 6) == -6048);   // composite: T_6 = T_2 T_3
  CHECK(oracle_trace_level1(12, 4) == -1472);   // prime power recursion
  CHECK(oracle_trace_level1(16, 1) == 1);
  CHECK(oracle_trace_level1(10, 1) == 0);
  CHECK(oracle_trace_level1(24, 1) == 2);
  CHECK(oracle_trace_level1(24, 2) == 1080);    // tr T_2 on S_24(1)
}

TEST_CASE("half-integral oracle trace values cross-checked by two closed forms") {
  // These values were matched independently by the assembled Shimura-side
  // formula and by the newform trace formula rhs of the main identity.
  EtaSpaceSpec spec{EtaFamily::Eta24, 11, 0};
  CHECK(oracle_trace_T_nsq(spec, 1) == 1);
  CHECK(oracle_trace_T_nsq(spec, 5) == -2694);
  CHECK(oracle_trace_T_nsq(spec, 7) == 3544);
  CHECK_THROWS_AS(oracle_trace_T_nsq(spec, 2), std::invalid_argument);
  CHECK_THROWS_AS(oracle_trace_T_nsq(spec, 3), std::invalid_argument);
  EtaSpaceSpec e8{EtaFamily::Eta8, 1, 0};
  CHECK(oracle_trace_T_nsq(e8, 3) == -4);  // eigenvalue (-4|p)(p+1) on eta(8 tau)^3
  CHECK(oracle_trace_T_nsq(e8, 5) == 6);
  CHECK_THROWS_AS(oracle_trace_T_nsq(e8, 2), std::invalid_argument);
}
