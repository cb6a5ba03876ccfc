#include <bit>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "hsas/grid.hpp"

namespace hsas {

namespace {

const char* kind_name(FileKind k) {
  switch (k) {
    case FileKind::grid: return "grid";
    case FileKind::spectrum: return "spectrum";
    case FileKind::analytic: return "analytic";
  }
  return "grid";
}

FileKind parse_kind(const std::string& s) {
  if (s == "grid") return FileKind::grid;
  if (s == "spectrum") return FileKind::spectrum;
  if (s == "analytic") return FileKind::analytic;
  fail(errc::shape_mismatch, "unknown container kind '" + s + "'");
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string (*fmt)(const T&)) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += fmt(xs[i]);
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Payload values travel as little-endian binary64 regardless of host order.
void encode_le(const std::vector<double>& src, std::vector<unsigned char>& dst) {
  dst.resize(src.size() * 8);
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto u = std::bit_cast<std::uint64_t>(src[i]);
    if constexpr (std::endian::native == std::endian::big) u = __builtin_bswap64(u);
    std::memcpy(dst.data() + i * 8, &u, 8);
  }
}

void decode_le(const std::vector<unsigned char>& src, std::vector<double>& dst) {
  dst.resize(src.size() / 8);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    std::uint64_t u;
    std::memcpy(&u, src.data() + i * 8, 8);
    if constexpr (std::endian::native == std::endian::big) u = __builtin_bswap64(u);
    dst[i] = std::bit_cast<double>(u);
  }
}

void write_file(const std::string& path, FileKind kind, const GridLattice& lat,
                const std::vector<const std::vector<double>*>& components) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_failure, "cannot open '" + path + "' for writing");

  std::ostringstream header;
  header << "HSAS1 kind=" << kind_name(kind) << " dim=" << lat.dim << " shape=";
  for (std::size_t i = 0; i < lat.shape.size(); ++i)
    header << (i ? "," : "") << lat.shape[i];
  header << " origin=";
  for (std::size_t i = 0; i < lat.origin.size(); ++i)
    header << (i ? "," : "") << fmt_double(lat.origin[i]);
  header << " spacing=";
  for (std::size_t i = 0; i < lat.spacing.size(); ++i)
    header << (i ? "," : "") << fmt_double(lat.spacing[i]);
  header << " components=" << components.size() << "\n";
  const std::string h = header.str();
  out.write(h.data(), static_cast<std::streamsize>(h.size()));

  std::vector<unsigned char> buf;
  for (const auto* comp : components) {
    if (comp->size() != lat.size()) fail(errc::shape_mismatch, "component length does not match lattice");
    encode_le(*comp, buf);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  }
  if (!out) fail(errc::io_failure, "write to '" + path + "' failed");
}

}  // namespace

void grid_write(const std::string& path, const GridSignal& g) {
  write_file(path, FileKind::grid, g.lattice, {&g.data});
}

void grid_write(const std::string& path, const HyperSpectrum& s) {
  std::vector<const std::vector<double>*> comps;
  for (const auto& c : s.components) comps.push_back(&c);
  write_file(path, FileKind::spectrum, s.lattice, comps);
}

void grid_write(const std::string& path, const AnalyticGrid& a) {
  std::vector<const std::vector<double>*> comps;
  for (const auto& c : a.components) comps.push_back(&c);
  write_file(path, FileKind::analytic, a.lattice, comps);
}

HsasFile grid_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_failure, "cannot open '" + path + "' for reading");

  std::string header;
  if (!std::getline(in, header)) fail(errc::truncated_payload, "missing header line");

  std::istringstream hs(header);
  std::string magic;
  hs >> magic;
  if (magic != "HSAS1") fail(errc::magic_mismatch, "expected magic HSAS1, found '" + magic + "'");

  FileKind kind = FileKind::grid;
  int dim = -1;
  std::size_t n_components = 0;
  std::vector<int> shape;
  std::vector<double> origin, spacing;
  std::string field;
  while (hs >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) fail(errc::shape_mismatch, "malformed header field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string val = field.substr(eq + 1);
    if (key == "kind") {
      kind = parse_kind(val);
    } else if (key == "dim") {
      dim = std::stoi(val);
    } else if (key == "shape") {
      for (const auto& tok : split_csv(val)) shape.push_back(std::stoi(tok));
    } else if (key == "origin") {
      for (const auto& tok : split_csv(val)) origin.push_back(std::stod(tok));
    } else if (key == "spacing") {
      for (const auto& tok : split_csv(val)) spacing.push_back(std::stod(tok));
    } else if (key == "components") {
      n_components = static_cast<std::size_t>(std::stoul(val));
    } else {
      fail(errc::shape_mismatch, "unknown header field '" + key + "'");
    }
  }
  if (dim < 1 || shape.size() != static_cast<std::size_t>(dim))
    fail(errc::shape_mismatch, "dim and shape disagree");
  if (n_components == 0) fail(errc::shape_mismatch, "components must be >= 1");
  const std::size_t expected =
      (kind == FileKind::grid) ? 1u : (std::size_t{1} << dim);
  if (n_components != expected)
    fail(errc::shape_mismatch, "component count does not match kind");

  HsasFile f;
  f.kind = kind;
  f.lattice = GridLattice(std::move(shape), std::move(origin), std::move(spacing));
  const std::size_t n = f.lattice.size();

  std::vector<unsigned char> buf(n * 8);
  for (std::size_t c = 0; c < n_components; ++c) {
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::size_t>(in.gcount()) != buf.size())
      fail(errc::truncated_payload, "payload ends before component " + std::to_string(c));
    std::vector<double> comp;
    decode_le(buf, comp);
    f.components.push_back(std::move(comp));
  }
  return f;
}

GridSignal as_grid(HsasFile f) {
  if (f.kind != FileKind::grid) fail(errc::shape_mismatch, "file does not hold a real grid");
  return GridSignal{std::move(f.lattice), std::move(f.components[0])};
}

HyperSpectrum as_spectrum(HsasFile f) {
  if (f.kind != FileKind::spectrum) fail(errc::shape_mismatch, "file does not hold a spectrum");
  return HyperSpectrum{std::move(f.lattice), std::move(f.components)};
}

AnalyticGrid as_analytic(HsasFile f) {
  if (f.kind != FileKind::analytic) fail(errc::shape_mismatch, "file does not hold an analytic grid");
  return AnalyticGrid{std::move(f.lattice), std::move(f.components)};
}

void csv_write(const std::string& path, const GridSignal& g) {
  if (g.lattice.dim > 2) fail(errc::unsupported, "CSV export supports d <= 2 only");
  std::ofstream out(path);
  if (!out) fail(errc::io_failure, "cannot open '" + path + "' for writing");
  const int d = g.lattice.dim;
  for (std::size_t flat = 0; flat < g.data.size(); ++flat) {
    std::size_t rest = flat;
    int idx[2] = {0, 0};
    for (int a = d; a >= 1; --a) {
      const auto n = static_cast<std::size_t>(g.lattice.shape[static_cast<std::size_t>(a - 1)]);
      idx[a - 1] = static_cast<int>(rest % n);
      rest /= n;
    }
    for (int a = 0; a < d; ++a) out << idx[a] << ',';
    out << fmt_double(g.data[flat]) << '\n';
  }
  if (!out) fail(errc::io_failure, "write to '" + path + "' failed");
}

GridSignal csv_read(const std::string& path, const GridLattice& lattice) {
  if (lattice.dim > 2) fail(errc::unsupported, "CSV import supports d <= 2 only");
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open '" + path + "' for reading");
  GridSignal g;
  g.lattice = lattice;
  g.data.assign(lattice.size(), 0.0);
  std::vector<bool> seen(lattice.size(), false);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto toks = split_csv(line);
    if (toks.size() != static_cast<std::size_t>(lattice.dim) + 1)
      fail(errc::shape_mismatch, "CSV line has wrong field count: '" + line + "'");
    std::size_t flat = 0;
    for (int a = 0; a < lattice.dim; ++a) {
      const int idx = std::stoi(toks[static_cast<std::size_t>(a)]);
      const int n = lattice.shape[static_cast<std::size_t>(a)];
      if (idx < 0 || idx >= n) fail(errc::shape_mismatch, "CSV index out of range");
      flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx);
    }
    g.data[flat] = std::stod(toks.back());
    seen[flat] = true;
  }
  for (bool s : seen)
    if (!s) fail(errc::truncated_payload, "CSV does not cover every lattice sample");
  return g;
}

}  // namespace hsas
