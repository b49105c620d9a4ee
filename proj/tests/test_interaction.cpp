#include <cmath>
#include <random>

#include "cavkin/cavity.hpp"
#include "cavkin/dispersion.hpp"
#include "cavkin/errors.hpp"
#include "cavkin/interaction.hpp"
#include "cavkin/statistics.hpp"
#include "doctest.h"

using namespace cavkin;

namespace {

const PhysicalConstants pc{};

// Reference channel: 20 eV transition on a 1 GeV atom, 16 ns lifetime,
// excited mode carrying 10 eV of kinetic energy, 1 cm^3 cavity.
DecayChannel reference_channel(double window_fwhm = 5.0, double spacing_frac = 1e-3) {
  const double rest = ev_to_joule(1e9);
  const double tr = ev_to_joule(20.0);
  DecayChannel ch;
  ch.triple = SpeciesTriple{{"a", rest, 3}, make_photon(), {"ax", rest + tr, 5}, tr};
  ch.t_sp = 16e-9;
  const double center = tr / pc.hbar;
  const double fwhm = 1e-6 * center;
  ch.line = LineShape::make(center, fwhm, spacing_frac * fwhm, window_fwhm * fwhm);
  ch.cavity = CavitySpec{{0.01, 0.01, 0.01}, 6000.0};
  ch.excited_kinetic = ev_to_joule(10.0);
  ch.validate(pc);
  return ch;
}

}  // namespace

TEST_CASE("micro rate: equal fields, 1/V scaling, window contract") {
  auto ch = reference_channel();
  const double omega = ch.line.center();
  const RateSet r = micro_rate(pc, ch, omega);
  CHECK(r.alpha > 0.0);
  CHECK(r.alpha == r.beta_abs);
  CHECK(r.alpha == r.beta_em);
  CHECK(r.alpha == r.gamma);

  auto doubled = ch;
  doubled.cavity.edge_lengths[0] *= 2.0;
  CHECK(micro_rate(pc, doubled, omega).alpha == doctest::Approx(r.alpha / 2.0).epsilon(1e-14));

  CHECK_THROWS_AS(micro_rate(pc, ch, omega + 2.0 * ch.line.half_window()), DomainError);
}

TEST_CASE("micro rate peak value and dp-elimination oracle") {
  auto ch = reference_channel();
  const double omega0 = ch.line.center();
  const double nu0 = nu_of_omega(pc, ch.triple.boson, omega0);
  const double d_phi = ch.triple.boson.degeneracy;
  const double d_a = ch.triple.ground.degeneracy;

  const double expected = M_PI * std::pow(pc.c, 3) * ch.line.value(omega0) /
                          (d_phi * d_a * omega0 * nu0 * ch.t_sp * ch.cavity.volume());
  CHECK(micro_rate(pc, ch, omega0).alpha == doctest::Approx(expected).epsilon(1e-13));

  // Eliminating dp between (dp2) and (dp3):
  // alpha * d_phi d_a * dN_phi(delta_omega) = f * delta_omega / t_sp.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> pick(-ch.line.grid_radius(),
                                                   ch.line.grid_radius());
  const double d_omega = ch.line.grid_spacing();
  for (int i = 0; i < 50; ++i) {
    const std::int64_t l = pick(rng);
    const double omega = ch.line.grid_point(l);
    const double alpha = micro_rate(pc, ch, omega).alpha;
    const double dn_phi =
        resonance_count_in_band(pc, ch.triple.boson, omega, d_omega, ch.cavity.volume());
    const double lhs = alpha * d_phi * d_a * dn_phi;
    const double rhs = ch.line.value(omega) * d_omega / ch.t_sp;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("stimulated probabilities") {
  auto ch = reference_channel();
  const double omega0 = ch.line.center();
  const double u = 1e-12;  // J/m^3

  SUBCASE("no radiation, no stimulation; linear in the energy density") {
    CHECK(w_em(pc, ch, 0.0, omega0) == 0.0);
    CHECK(w_abs(pc, ch, 0.0, omega0) == 0.0);
    CHECK(w_em(pc, ch, 2.0 * u, omega0) ==
          doctest::Approx(2.0 * w_em(pc, ch, u, omega0)).epsilon(1e-14));
    CHECK_THROWS_AS(w_em(pc, ch, -1.0, omega0), DomainError);
  }

  SUBCASE("W_em equals d_a * alpha * n_phi") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> un(0.1, 1e6);
    std::uniform_int_distribution<std::int64_t> pick(-ch.line.grid_radius(),
                                                     ch.line.grid_radius());
    for (int i = 0; i < 50; ++i) {
      const double n_phi = un(rng);
      const double omega = ch.line.grid_point(pick(rng));
      const double u_k = n_phi * pc.hbar * omega / ch.cavity.volume();
      const double lhs = w_em(pc, ch, u_k, omega);
      const double rhs =
          ch.triple.ground.degeneracy * micro_rate(pc, ch, omega).beta_em * n_phi;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }

  SUBCASE("W_abs / W_em is the degeneracy ratio") {
    const double ratio = w_abs(pc, ch, u, omega0) / w_em(pc, ch, u, omega0);
    CHECK(ratio == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("forgotten process probability") {
  auto ch = reference_channel();
  const double kinetic0 = ch.ground_kinetic_at_offset(pc, 0.0);
  const double u = 1e-12;

  CHECK(w_forgotten_kinetic(pc, ch, 0.0, kinetic0) == 0.0);
  CHECK(w_forgotten_kinetic(pc, ch, 2.0 * u, kinetic0) ==
        doctest::Approx(2.0 * w_forgotten_kinetic(pc, ch, u, kinetic0)).epsilon(1e-14));

  SUBCASE("equals d_phi * gamma * n_a") {
    const double n_a = 7.5;
    const double omega_a = omega_from_kinetic(pc, ch.triple.ground, kinetic0);
    const double u_n = n_a * pc.hbar * omega_a / ch.cavity.volume();
    // The photon mode that pairs with this atom mode sits at the line center.
    const double lhs = w_forgotten_kinetic(pc, ch, u_n, kinetic0);
    const double rhs = ch.triple.boson.degeneracy *
                       micro_rate(pc, ch, ch.line.center()).gamma * n_a;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    // omega_a route agrees with the kinetic route (well above cancellation).
    CHECK(w_forgotten(pc, ch, u_n, omega_a) == doctest::Approx(lhs).epsilon(1e-6));
  }

  SUBCASE("negligible against photon stimulation at thermal equilibrium") {
    // d_phi/d_a * n_a/n_phi over the documented physical grid, in log space.
    for (double rest_ev : {1e6, 1e9, 1e11}) {
      for (double tr_ev : {1.0, 10.0, 100.0}) {
        for (double temp : {1.0, 300.0, 1e4}) {
          const double kT = pc.k_B * temp;
          const double x_phi = ev_to_joule(tr_ev) / kT;
          const double x_a = (ev_to_joule(rest_ev) + kT) / kT;  // thermal kinetic
          const double log_ratio = std::log(2.0 / 3.0) + log_bose_occupation_x(x_a) -
                                   log_bose_occupation_x(x_phi);
          CHECK(log_ratio / std::log(10.0) < -3.0);
        }
      }
    }
  }
}

TEST_CASE("Einstein coefficients and their relations") {
  auto ch = reference_channel();
  CHECK(einstein_A(ch) == doctest::Approx(6.25e7).epsilon(1e-14));  // 16 ns

  const double omega0 = ch.line.center();
  const double nu0 = nu_of_omega(pc, ch.triple.boson, omega0);
  const double a_over_b = einstein_A(ch) / einstein_B_em(pc, ch);
  const double eq6 = 8.0 * M_PI * nu0 * nu0 * pc.hbar * omega0 / std::pow(pc.c, 3);
  CHECK(a_over_b == doctest::Approx(eq6).epsilon(1e-12));
  CHECK(einstein_B_abs(pc, ch) / einstein_B_em(pc, ch) ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-12));

  auto slow = ch;
  slow.t_sp *= 2.0;
  CHECK(einstein_B_em(pc, slow) ==
        doctest::Approx(einstein_B_em(pc, ch) / 2.0).epsilon(1e-14));

  SUBCASE("C against B_em") {
    const double kinetic0 = ch.ground_kinetic_at_offset(pc, 0.0);
    const double omega_a0 = omega_from_kinetic(pc, ch.triple.ground, kinetic0);
    const double nu_a0 = nu_from_kinetic(pc, ch.triple.ground, kinetic0);
    const double expected_ratio =
        (ch.triple.boson.degeneracy * omega0 * nu0 * nu0) /
        (ch.triple.ground.degeneracy * omega_a0 * nu_a0 * nu_a0);
    CHECK(coefficient_C(pc, ch) / einstein_B_em(pc, ch) ==
          doctest::Approx(expected_ratio).epsilon(1e-12));
  }

  SUBCASE("massless ground state turns C into B_em") {
    const double tr = ev_to_joule(20.0);
    DecayChannel sym;
    sym.triple = SpeciesTriple{{"b", 0.0, 2}, make_photon(), {"bb", tr, 1}, tr};
    sym.t_sp = 16e-9;
    const double center = tr / pc.hbar;
    const double fwhm = 1e-6 * center;
    sym.line = LineShape::make(center, fwhm, 1e-3 * fwhm, 5.0 * fwhm);
    sym.cavity = CavitySpec{{0.01, 0.01, 0.01}, 6000.0};
    // Ground "kinetic" energy equals the photon energy: omega_a0 = omega_phi0.
    sym.excited_kinetic = pc.hbar * sym.line.center();
    CHECK(coefficient_C(pc, sym) ==
          doctest::Approx(einstein_B_em(pc, sym)).epsilon(1e-12));
  }

  SUBCASE("energy-conservation failure") {
    auto bad = ch;
    bad.excited_kinetic = 0.0;
    // At the line center the photon then carries the whole excitation.
    CHECK_THROWS_AS(coefficient_C(pc, bad), DomainError);
  }
}

TEST_CASE("broad-band reconstruction of B_em, B_abs and C") {
  // delta_omega = 1e-3 fwhm, fwhm = 1e-6 omega_0, window 5 fwhm.
  auto ch = reference_channel(5.0, 1e-3);

  const BroadbandRebuild bem = rebuild_B_em(pc, ch);
  const BroadbandRebuild babs = rebuild_B_abs(pc, ch);
  const BroadbandRebuild cc = rebuild_C(pc, ch);
  for (const auto& r : {bem, babs, cc}) {
    CHECK(r.closed_form > 0.0);
    CHECK(std::abs(r.rel_error) <= 1e-3);
  }

  // Halving the grid spacing at least halves every reconstruction error.
  auto fine = ch;
  fine.line = ch.line.with_grid_spacing(ch.line.grid_spacing() / 2.0);
  CHECK(std::abs(rebuild_B_em(pc, fine).rel_error) <=
        0.5 * std::abs(bem.rel_error));
  CHECK(std::abs(rebuild_B_abs(pc, fine).rel_error) <=
        0.5 * std::abs(babs.rel_error));
  CHECK(std::abs(rebuild_C(pc, fine).rel_error) <= 0.5 * std::abs(cc.rel_error));
}

TEST_CASE("W's and coefficients are nonnegative and scale as 1/t_sp") {
  auto ch = reference_channel();
  const double omega0 = ch.line.center();
  auto slow = ch;
  slow.t_sp *= 4.0;
  const double u = 3e-9;
  CHECK(w_em(pc, slow, u, omega0) ==
        doctest::Approx(w_em(pc, ch, u, omega0) / 4.0).epsilon(1e-14));
  CHECK(coefficient_C(pc, slow) == doctest::Approx(coefficient_C(pc, ch) / 4.0).epsilon(1e-14));
  CHECK(micro_rate(pc, slow, omega0).alpha ==
        doctest::Approx(micro_rate(pc, ch, omega0).alpha / 4.0).epsilon(1e-14));
}
