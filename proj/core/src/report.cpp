#include "dimcert/report.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "dimcert/algebraic.hpp"
#include "dimcert/asymmetric.hpp"
#include "dimcert/oracle.hpp"
#include "dimcert/search.hpp"
#include "dimcert/symmetric.hpp"

namespace dimcert {

namespace {

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::string fmt(double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", v);
  return {buf, static_cast<std::size_t>(n)};
}

}  // namespace

void RunConfig::assign(const std::string& key, const std::string& value) {
  try {
    if (key == "command") command = value;
    else if (key == "translations") translations = parse_list(value);
    else if (key == "probabilities") probabilities = parse_list(value);
    else if (key == "lambda_lo") lambda_lo = std::stod(value);
    else if (key == "lambda_hi") lambda_hi = std::stod(value);
    else if (key == "alpha") alpha = std::stod(value);
    else if (key == "d1") d1 = std::stod(value);
    else if (key == "d2") d2 = std::stod(value);
    else if (key == "epsilon") epsilon = std::stod(value);
    else if (key == "cells") cells = std::stoll(value);
    else if (key == "max_iters") max_iters = std::stoll(value);
    else if (key == "theta") theta = std::stod(value);
    else if (key == "threshold") threshold = std::stod(value);
    else if (key == "margin") margin = std::stod(value);
    else if (key == "overlap") overlap = std::stod(value);
    else if (key == "intervals") intervals = std::stoll(value);
    else if (key == "workers") workers = std::stoll(value);
    else if (key == "poly_file") poly_file = value;
    else if (key == "poly_palindromic_half")
      poly_palindromic_half = value == "1" || value == "true";
    else if (key == "delta") delta = std::stod(value);
    else if (key == "depth") depth = std::stoll(value);
    else if (key == "out") out = value;
    else throw std::invalid_argument("unknown config key: " + key);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for " + key + ": " + value);
  }
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    cfg.assign(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void write_table(std::ostream& out, const BoundTable& table) {
  out << "lambda_lo,lambda_hi,alpha,status,iterations,cells\n";
  for (const BoundRow& r : table.rows)
    out << fmt(r.lambda_lo) << ',' << fmt(r.lambda_hi) << ',' << fmt(r.alpha)
        << ',' << to_string(r.status) << ',' << r.iterations << ',' << r.cells
        << '\n';
  out << "# complete\n";
}

BoundTable parse_table(std::istream& in) {
  BoundTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("lambda_lo", 0) == 0)
      continue;
    std::istringstream fields(line);
    std::string f;
    std::vector<std::string> v;
    while (std::getline(fields, f, ',')) v.push_back(f);
    if (v.size() != 6) throw std::invalid_argument("malformed CSV row");
    table.rows.push_back({std::stod(v[0]), std::stod(v[1]), std::stod(v[2]),
                          v[3] == "certified" ? CertStatus::certified
                                              : CertStatus::inconclusive,
                          std::stoll(v[4]), std::stoll(v[5])});
  }
  return table;
}

namespace {

std::int64_t effective_workers(const RunConfig& cfg) {
  if (const char* env = std::getenv("DIMCERT_WORKERS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v >= 1) return v;
  }
  return cfg.workers;
}

SimilarityScheme scheme_of(const RunConfig& cfg) {
  return {{cfg.lambda_lo, cfg.lambda_hi == 0.0 ? cfg.lambda_lo : cfg.lambda_hi},
          cfg.translations,
          cfg.probabilities};
}

SearchConfig search_of(const RunConfig& cfg) {
  return {cfg.d1,    cfg.d2,        cfg.epsilon, cfg.cells,
          cfg.max_iters, cfg.theta, cfg.threshold, cfg.margin};
}

BoundTable run_command(const RunConfig& cfg, std::ostream& err) {
  if (cfg.command == "certify") {
    const SimilarityScheme s = scheme_of(cfg);
    const ComplementaryScheme comp = build_complementary(s);
    const AdmissibleInterval J =
        admissible_interval(comp, s.ratio_box, cfg.margin);
    const CertificateResult r =
        certify_alpha(comp, s.ratio_box, J, cfg.cells,
                      {cfg.theta, cfg.max_iters, cfg.threshold, cfg.alpha});
    return {{{s.ratio_box.lo, s.ratio_box.hi, r.alpha, r.status,
              r.iterations_used, cfg.cells}}};
  }
  if (cfg.command == "regularity") {
    // Equal-ratio schemes only: lambda_lo is the shared contraction ratio.
    const AffineScheme s =
        AffineScheme::from_similarity(scheme_of(cfg), cfg.lambda_lo);
    const double r = default_regularity_radius(support_interval(s));
    const RegularityCertificate c = certify_regularity(
        s, cfg.alpha, r, cfg.cells,
        {cfg.theta, cfg.max_iters, cfg.threshold, cfg.alpha});
    return {{{cfg.lambda_lo, cfg.lambda_lo, c.alpha, c.status,
              c.iterations_used, cfg.cells}}};
  }
  if (cfg.command == "refine") {
    const SimilarityScheme s = scheme_of(cfg);
    const CertificateResult r =
        refine_bound(s, s.ratio_box, search_of(cfg));
    return {{{s.ratio_box.lo, s.ratio_box.hi, r.alpha, r.status,
              r.iterations_used, cfg.cells}}};
  }
  if (cfg.command == "scan") {
    const SimilarityScheme s = scheme_of(cfg);
    return scan_range(s, cfg.lambda_lo, cfg.lambda_hi, cfg.intervals,
                      cfg.overlap, search_of(cfg), effective_workers(cfg));
  }
  if (cfg.command == "salem") {
    std::ifstream in(cfg.poly_file);
    if (!in) throw std::ios_base::failure("cannot read " + cfg.poly_file);
    std::stringstream text;
    text << in.rdbuf();
    BoundTable table;
    for (const IntegerPolynomial& p :
         parse_polynomials(text.str(), cfg.poly_palindromic_half)) {
      const Interval box = reciprocal_box(p, cfg.delta);
      const AlgebraicClassification cls = classify(p);
      err << "# " << to_string(cls.kind) << " beta=" << fmt(cls.dominant_root)
          << (cls.certified ? " certified" : "") << '\n';
      const CertificateResult r = refine_bound(
          {box, cfg.translations, cfg.probabilities}, box, search_of(cfg));
      table.rows.push_back({box.lo, box.hi, r.alpha, r.status,
                            r.iterations_used, cfg.cells});
    }
    return table;
  }
  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& err) {
  try {
    std::ostringstream body;
    if (cfg.command == "near-one") {
      // epsilon -> e, alpha -> c, margin -> grid halfwidth, cells -> points.
      const bool ok =
          near_one_check(cfg.epsilon, cfg.alpha, cfg.margin, cfg.cells);
      body << "near_one," << (ok ? "true" : "false") << '\n';
    } else if (cfg.command == "oracle") {
      const SimilarityScheme s = scheme_of(cfg);
      const AtomMeasure atoms = finite_level_atoms(s, cfg.depth);
      const double span = atoms.positions.back() - atoms.positions.front();
      const EmpiricalDimensions d =
          empirical_dimensions(atoms, 1e-4 * span, 0.1 * span, 16);
      body << "corr_slope,frostman_slope,atoms\n"
           << fmt(d.corr_slope) << ',' << fmt(d.frostman_slope) << ','
           << atoms.positions.size() << '\n';
    } else {
      write_table(body, run_command(cfg, err));
    }
    if (cfg.out.empty()) {
      std::cout << body.str();
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw std::ios_base::failure("cannot write " + cfg.out);
      f << body.str();
      if (!f) throw std::ios_base::failure("write failed: " + cfg.out);
    }
    return 0;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dimcert
