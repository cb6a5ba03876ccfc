#include "hsas/noncomm.hpp"

#include <bit>
#include <complex>
#include <sstream>

#include "hsas/fft.hpp"
#include "hsas/transform.hpp"

namespace hsas {

std::string OrderingCandidate::encode() const {
  std::string fwd, inv;
  for (int a = 0; a < dim; ++a) {
    fwd += (fwd_right_mask >> a & 1u) ? 'R' : 'L';
    inv += (inv_right_mask >> a & 1u) ? 'R' : 'L';
  }
  return "fwd=" + fwd + " inv=" + inv;
}

bool SignTable::consistent() const {
  for (const auto& e : entries)
    if (!e.ok()) return false;
  return true;
}

int SignTable::got(std::uint32_t upper, std::uint32_t lower) const {
  for (const auto& e : entries)
    if (e.upper == upper && e.lower == lower) return e.got;
  fail(errc::bad_argument, "no such bracket family");
}

SignTable candidate_signs(const OrderingCandidate& cand, const AlgebraSpec& spec) {
  SignTable table;
  const int d = cand.dim;
  const std::uint32_t n = 1u << d;

  // Generators of `mask` as they appear in a placement: left group in
  // ascending axis order, then right group in ascending order.
  const auto placed = [d](std::uint32_t mask, std::uint32_t right_mask) {
    std::vector<int> seq;
    for (int a = 1; a <= d; ++a)
      if ((mask >> (a - 1) & 1u) && !(right_mask >> (a - 1) & 1u)) seq.push_back(a);
    for (int a = 1; a <= d; ++a)
      if ((mask >> (a - 1) & 1u) && (right_mask >> (a - 1) & 1u)) seq.push_back(a);
    return seq;
  };

  for (std::uint32_t upper = 0; upper < n; ++upper) {
    // The transform's term for projection `upper` is prod(-e_a) over the
    // forward-ordered generators.
    const std::vector<int> fwd = placed(upper, cand.fwd_right_mask);
    const int fwd_sign = (std::popcount(upper) & 1) ? -1 : +1;

    for (std::uint32_t lower = 0; lower < n; ++lower) {
      // Inverse exponentials supply e_b around the transform value: left
      // group, then the transform's blade, then the right group.
      std::vector<int> seq;
      for (int a = 1; a <= d; ++a)
        if ((lower >> (a - 1) & 1u) && !(cand.inv_right_mask >> (a - 1) & 1u)) seq.push_back(a);
      seq.insert(seq.end(), fwd.begin(), fwd.end());
      for (int a = 1; a <= d; ++a)
        if ((lower >> (a - 1) & 1u) && (cand.inv_right_mask >> (a - 1) & 1u)) seq.push_back(a);

      const auto [sign, blade] = normalize_basis_product(spec, seq);
      BracketSign e;
      e.upper = upper;
      e.lower = lower;
      e.component = blade;
      e.got = fwd_sign * sign;
      e.want = shift_sign(Direction(d, lower), Direction(d, blade));
      table.entries.push_back(e);
    }
  }
  return table;
}

bool OrderingReport::has_candidate(std::uint32_t fwd_right, std::uint32_t inv_right,
                                   bool consistent) const {
  for (const auto& r : results)
    if (r.candidate.fwd_right_mask == fwd_right && r.candidate.inv_right_mask == inv_right)
      return r.consistent == consistent;
  return false;
}

std::string OrderingReport::to_text() const {
  std::ostringstream out;
  out << "ordering search d=" << dim << " swap_sign=" << swap_sign << " candidates="
      << results.size() << " consistent=" << consistent_count << "\n";
  for (const auto& r : results) {
    out << r.candidate.encode() << "  " << (r.consistent ? "consistent" : "mismatch");
    if (!r.consistent) out << "  " << r.first_mismatch;
    out << "\n";
  }
  if (consistent_count == 0)
    out << "certificate: every candidate fails on at least one degree-2 component\n";
  return out.str();
}

OrderingReport ordering_search(int d, const AlgebraSpec& spec) {
  if (d < 2 || d > 4) fail(errc::bad_argument, "ordering search supports 2 <= d <= 4");
  if (spec.dim != d) fail(errc::dimension_mismatch, "spec dimension != d");
  for (int s : spec.square_sign)
    if (s != -1) fail(errc::unsupported, "ordering search requires elliptic generators");

  OrderingReport rep;
  rep.dim = d;
  rep.swap_sign = spec.swap_sign;
  const std::uint32_t limit = 1u << d;
  for (std::uint32_t fwd = 0; fwd < limit; ++fwd) {
    for (std::uint32_t inv = 0; inv < limit; ++inv) {
      CandidateResult r;
      r.candidate = OrderingCandidate{d, fwd, inv};
      r.signs = candidate_signs(r.candidate, spec);
      r.consistent = r.signs.consistent();
      if (!r.consistent) {
        // Prefer a degree-2 witness; one always exists in the anti-commuting
        // case and matches the shape of the hand proof.
        const BracketSign* witness = nullptr;
        for (const auto& e : r.signs.entries) {
          if (e.ok()) continue;
          if (!witness) witness = &e;
          if (std::popcount(e.component) == 2) {
            witness = &e;
            break;
          }
        }
        std::ostringstream ms;
        ms << "component e_" << Direction(d, witness->component).to_string() << " bracket("
           << Direction(d, witness->upper).to_string() << ","
           << Direction(d, witness->lower).to_string() << ") got "
           << (witness->got > 0 ? '+' : '-') << " want " << (witness->want > 0 ? '+' : '-');
        r.first_mismatch = ms.str();
      } else {
        ++rep.consistent_count;
      }
      rep.results.push_back(std::move(r));
    }
  }
  return rep;
}

namespace {

using cd = std::complex<double>;

// One FFT pass over a pair of real planes interpreted as (re, im) along the
// given axis, with the same bin phase/scale convention as the hypercomplex
// transform.
void qft_pass(std::vector<double>& re, std::vector<double>& im, const GridLattice& lat, int axis,
              int sign) {
  const auto a = static_cast<std::size_t>(axis - 1);
  const auto n = static_cast<std::size_t>(lat.shape[a]);
  const std::size_t step = lat.stride(axis);
  const std::size_t n_lines = re.size() / n;

  const double scale = (sign < 0) ? lat.spacing[a]
                                  : 1.0 / (static_cast<double>(n) * lat.spacing[a]);
  std::vector<cd> ph(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = lat.bin_frequency(axis, static_cast<int>(k));
    ph[k] = std::polar(scale, static_cast<double>(sign) * w * lat.origin[a]);
  }

  std::vector<cd> line(n);
  for (std::size_t l = 0; l < n_lines; ++l) {
    const std::size_t outer = l / step;
    const std::size_t inner = l % step;
    const std::size_t start = outer * n * step + inner;
    for (std::size_t t = 0; t < n; ++t) line[t] = cd{re[start + t * step], im[start + t * step]};
    if (sign > 0)
      for (std::size_t t = 0; t < n; ++t) line[t] *= ph[t];
    fft(line, sign);
    if (sign < 0)
      for (std::size_t t = 0; t < n; ++t) line[t] *= ph[t];
    for (std::size_t t = 0; t < n; ++t) {
      re[start + t * step] = line[t].real();
      im[start + t * step] = line[t].imag();
    }
  }
}

}  // namespace

AnalyticGrid quaternion_analytic_2d(const GridSignal& g) {
  if (g.lattice.dim != 2) fail(errc::dimension_mismatch, "quaternion pipeline requires d = 2");
  const std::size_t n = g.data.size();

  // Quaternion planes 1, i, j, k. Left multiplication by e^{s i w x1} acts on
  // the complex pairs (1, i) and (j, k); right multiplication by e^{s j w x2}
  // acts on (1, j) and (i, k).
  std::vector<double> qw = g.data, qx(n, 0.0), qy(n, 0.0), qz(n, 0.0);

  qft_pass(qw, qx, g.lattice, 1, -1);
  qft_pass(qy, qz, g.lattice, 1, -1);
  qft_pass(qw, qy, g.lattice, 2, -1);
  qft_pass(qx, qz, g.lattice, 2, -1);

  const FrequencyMask mask = FrequencyMask::analytic(g.lattice);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = mask.at(g.lattice, i);
    qw[i] *= m;
    qx[i] *= m;
    qy[i] *= m;
    qz[i] *= m;
  }

  qft_pass(qw, qx, g.lattice, 1, +1);
  qft_pass(qy, qz, g.lattice, 1, +1);
  qft_pass(qw, qy, g.lattice, 2, +1);
  qft_pass(qx, qz, g.lattice, 2, +1);

  AnalyticGrid out;
  out.lattice = g.lattice;
  out.components = {std::move(qw), std::move(qx), std::move(qy), std::move(qz)};
  return out;
}

}  // namespace hsas
