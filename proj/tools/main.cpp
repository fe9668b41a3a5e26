#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entanglekit/comparability.hpp"
#include "entanglekit/density.hpp"
#include "entanglekit/equi_entangled.hpp"
#include "entanglekit/errors.hpp"
#include "entanglekit/rng.hpp"
#include "entanglekit/sampling.hpp"
#include "entanglekit/schmidt.hpp"
#include "svg_plot.hpp"
#include "text_util.hpp"

namespace {

using namespace entanglekit;
using ektool::format_shortest;
using ektool::format_table;
using ektool::join_coeffs;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os.is_open()) {
    throw IoFailure("cannot open '" + path + "' for writing");
  }
  return os;
}

void finish_output(std::ofstream& os, const std::string& path) {
  os.flush();
  if (!os.good()) {
    throw IoFailure("write to '" + path + "' failed");
  }
}

void print_row(const std::string& key, const std::string& value) {
  std::cout << std::left << std::setw(15) << key << value << '\n';
}

SchmidtVector parse_vector(const std::string& text, bool normalize, double norm_tol) {
  return SchmidtVector::from_raw(ektool::parse_coeff_list(text), normalize, norm_tol);
}

struct MeasuresOpts {
  std::string coeffs;
  bool normalize = false;
  double tol = kNormTol;
  std::string out;
};

int run_measures(const MeasuresOpts& o) {
  SchmidtVector v = parse_vector(o.coeffs, o.normalize, o.tol);
  MeasureSet m = measures(v);
  print_row("rank", std::to_string(m.effective_rank));
  print_row("E", format_table(m.entropy));
  print_row("C", format_table(m.concurrence));
  print_row("C2", format_table(m.concurrence_squared));
  print_row("N", format_table(m.negativity));
  print_row("purity", format_table(m.purity));
  if (!o.out.empty()) {
    std::ofstream os = open_output(o.out);
    os << "coeffs,rank,E,C,C2,N,purity\n";
    os << join_coeffs(v.coeffs()) << ',' << m.effective_rank << ',' << format_shortest(m.entropy)
       << ',' << format_shortest(m.concurrence) << ',' << format_shortest(m.concurrence_squared)
       << ',' << format_shortest(m.negativity) << ',' << format_shortest(m.purity) << '\n';
    finish_output(os, o.out);
  }
  return 0;
}

struct CompareOpts {
  std::string coeffs_a;
  std::string coeffs_b;
  bool normalize = false;
  double tol = kPrefixTol;
};

int run_compare(const CompareOpts& o) {
  SchmidtVector a = parse_vector(o.coeffs_a, o.normalize, kNormTol);
  SchmidtVector b = parse_vector(o.coeffs_b, o.normalize, kNormTol);
  ComparabilityResult cls = classify(a, b, o.tol);
  MeasureSet ma = measures(a);
  MeasureSet mb = measures(b);

  print_row("class", to_string(cls.tag));
  if (cls.tag == Comparability::Incomparable) {
    print_row("witness_a", std::to_string(cls.witness_a_over));
    print_row("witness_b", std::to_string(cls.witness_b_over));
  }
  print_row("dE", format_table(ma.entropy - mb.entropy));
  print_row("dC2", format_table(ma.concurrence_squared - mb.concurrence_squared));
  print_row("dN", format_table(ma.negativity - mb.negativity));

  if (cls.tag != Comparability::Incomparable) {
    // Orient so the profile runs along the conversion direction u -> v.
    bool forward = cls.tag != Comparability::BConvertsToA;
    const SchmidtVector& u = forward ? a : b;
    const SchmidtVector& v = forward ? b : a;
    print_row("direction", forward ? "a -> b" : "b -> a");
    EpsilonProfile prof = epsilon_profile(u, v, o.tol);
    std::string eps_text;
    for (std::size_t i = 0; i < prof.eps.size(); ++i) {
      if (i) eps_text += ' ';
      eps_text += format_table(prof.eps[i]);
    }
    print_row("epsilon", eps_text);
    double gap = concurrence_gap(u, v, o.tol);
    double direct = concurrence_squared(u) - concurrence_squared(v);
    print_row("gap", format_table(gap));
    print_row("gap_residual", format_table(std::abs(gap - direct)));
  }
  return 0;
}

struct SearchOpts {
  SearchConfig cfg;
  std::string measure_name = "concurrence";
  std::string out;
};

int run_search(SearchOpts o) {
  o.cfg.measure =
      o.measure_name == "negativity" ? FlipMeasure::Negativity : FlipMeasure::Concurrence;
  std::vector<CounterexampleRecord> hits = find_nonmonotonic_pairs(o.cfg);

  std::ofstream os = open_output(o.out);
  os << "idx,a_coeffs,b_coeffs,E_a,E_b,M_a,M_b,class\n";
  for (const auto& rec : hits) {
    os << rec.index << ',' << join_coeffs(rec.vec_a.coeffs()) << ','
       << join_coeffs(rec.vec_b.coeffs()) << ',' << format_shortest(rec.entropy_a) << ','
       << format_shortest(rec.entropy_b) << ',' << format_shortest(rec.measure_a) << ','
       << format_shortest(rec.measure_b) << ',' << to_string(rec.classification.tag) << '\n';
  }
  finish_output(os, o.out);

  print_row("generator", std::string(kGeneratorId));
  print_row("seed", std::to_string(o.cfg.seed));
  print_row("rank", std::to_string(o.cfg.rank));
  print_row("samples", std::to_string(o.cfg.samples));
  print_row("measure", to_string(o.cfg.measure));
  print_row("margin", format_shortest(o.cfg.strict_margin));
  print_row("perturb", format_shortest(o.cfg.perturb));
  print_row("threads", std::to_string(o.cfg.threads));
  print_row("hits", std::to_string(hits.size()));
  print_row("wrote", o.out);
  return 0;
}

struct CurveOpts {
  std::vector<double> entropies;
  std::size_t points = 200;
  std::string out;
  std::string svg;
};

int run_curve(CurveOpts o) {
  std::sort(o.entropies.begin(), o.entropies.end());
  std::vector<std::vector<CurvePoint>> curves;
  curves.reserve(o.entropies.size());
  for (double e : o.entropies) {
    curves.push_back(trace_curve({e, o.points}));
  }

  std::ofstream os = open_output(o.out);
  os << "class_entropy,alpha1,alpha2,alpha3,C,C2,N\n";
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    std::string cls = format_shortest(o.entropies[ci]);
    for (const CurvePoint& p : curves[ci]) {
      os << cls << ',' << format_shortest(p.alpha1) << ',' << format_shortest(p.alpha2) << ','
         << format_shortest(p.alpha3) << ',' << format_shortest(p.concurrence) << ','
         << format_shortest(p.concurrence_squared) << ',' << format_shortest(p.negativity)
         << '\n';
    }
  }
  finish_output(os, o.out);

  if (!o.svg.empty()) {
    std::vector<ektool::Polyline> series;
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
      ektool::Polyline line;
      line.label = "E = " + format_shortest(o.entropies[ci]);
      for (const CurvePoint& p : curves[ci]) {
        line.x.push_back(p.alpha1);
        line.y.push_back(p.concurrence);
      }
      series.push_back(std::move(line));
    }
    std::ofstream svg = open_output(o.svg);
    ektool::write_svg_plot(svg, series, "alpha1", "C");
    finish_output(svg, o.svg);
  }

  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& c = curves[ci];
    std::ostringstream line;
    line << c.size() << " points, alpha1 [" << format_table(c.front().alpha1) << ", "
         << format_table(c.back().alpha1) << "], C2 [" << format_table(c.back().concurrence_squared)
         << ", " << format_table(c.front().concurrence_squared) << "]";
    print_row("class " + format_shortest(o.entropies[ci]), line.str());
  }
  print_row("wrote", o.out);
  if (!o.svg.empty()) print_row("svg", o.svg);
  return 0;
}

struct CrossingOpts {
  double e_low = 0.0;
  double e_high = 0.0;
  std::string out;
};

int run_crossing(const CrossingOpts& o) {
  CrossingQuadruple q = crossing_demo(o.e_low, o.e_high);
  const SchmidtVector* states[] = {&q.a, &q.b, &q.c, &q.d};
  const char* labels[] = {"A", "B", "C", "D"};

  std::cout << std::left << std::setw(6) << "state" << std::setw(14) << "alpha1" << std::setw(14)
            << "alpha2" << std::setw(14) << "alpha3" << std::setw(14) << "E" << std::setw(14)
            << "C" << std::setw(14) << "C2" << "N" << '\n';
  for (int i = 0; i < 4; ++i) {
    const SchmidtVector& v = *states[i];
    MeasureSet m = measures(v);
    std::cout << std::left << std::setw(6) << labels[i] << std::setw(14) << format_table(v[0])
              << std::setw(14) << format_table(v[1]) << std::setw(14) << format_table(v[2])
              << std::setw(14) << format_table(m.entropy) << std::setw(14)
              << format_table(m.concurrence) << std::setw(14)
              << format_table(m.concurrence_squared) << format_table(m.negativity) << '\n';
  }
  print_row("C(A)=C(D)", format_table(q.c_match_high) + "  (|diff| " +
                              format_shortest(std::abs(concurrence(q.a) - concurrence(q.d))) +
                              ")");
  print_row("C(B)=C(C)", format_table(q.c_match_low) + "  (|diff| " +
                             format_shortest(std::abs(concurrence(q.b) - concurrence(q.c))) +
                             ")");
  print_row("classify(A,C)", to_string(classify(q.a, q.c).tag));
  print_row("classify(B,D)", to_string(classify(q.b, q.d).tag));

  if (!o.out.empty()) {
    std::ofstream os = open_output(o.out);
    os << "state,alpha1,alpha2,alpha3,E,C,C2,N\n";
    for (int i = 0; i < 4; ++i) {
      const SchmidtVector& v = *states[i];
      MeasureSet m = measures(v);
      os << labels[i] << ',' << format_shortest(v[0]) << ',' << format_shortest(v[1]) << ','
         << format_shortest(v[2]) << ',' << format_shortest(m.entropy) << ','
         << format_shortest(m.concurrence) << ',' << format_shortest(m.concurrence_squared) << ','
         << format_shortest(m.negativity) << '\n';
    }
    finish_output(os, o.out);
    print_row("wrote", o.out);
  }
  return 0;
}

struct VerifyOpts {
  std::size_t rank = 4;
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
  bool self_test_violation = false;
};

int run_verify(const VerifyOpts& o) {
  bool all_pass = true;

  try {
    MonotoneReport rep = verify_monotone_on_comparable(o.rank, o.trials, o.seed);
    std::cout << "[PASS] E/C/N orderings follow the conversion direction on " << rep.trials
              << " comparable pairs (" << rep.strict_pairs << " strict, " << rep.equivalent_pairs
              << " equivalent); max gap residual " << format_shortest(rep.max_gap_residual)
              << '\n';
  } catch (const PropertyViolation& e) {
    std::cout << "[FAIL] monotonicity on comparable pairs: " << e.what() << '\n';
    all_pass = false;
  }

  constexpr std::size_t kSpotChecks = 25;
  constexpr double kAgreeTol = 1e-10;
  double max_delta = 0.0;
  std::string oracle_failure;
  for (std::size_t k = 0; k < kSpotChecks && oracle_failure.empty(); ++k) {
    std::mt19937_64 rng = substream(o.seed ^ 0x6F7261636CULL, k);
    std::size_t rank = 2 + k % 3;
    std::size_t dim_a = std::max<std::size_t>(rank, 2 + k % 3);
    std::size_t dim_b = std::max<std::size_t>(rank, 2 + (k / 3) % 3);
    SchmidtVector v = sample_simplex(rank, rng);
    PureStateVector s = embed_state(v, dim_a, dim_b, o.seed * 1000 + k);
    DensityMatrix rho_a = reduce_a(s);

    double deltas[] = {
        std::abs(entropy_via_eigen(rho_a) - entropy_of_entanglement(v)),
        std::abs(rho_a.trace_of_square() - purity(v)),
        std::abs(concurrence_via_reduced(rho_a) - concurrence(v)),
        std::abs(negativity_via_pt(s) - negativity(v)),
    };
    for (double d : deltas) max_delta = std::max(max_delta, d);

    std::vector<double> eig = eig_sym(partial_transpose_a(full_density(s), dim_a, dim_b));
    std::vector<double> analytic = analytic_pt_spectrum(v, dim_a, dim_b);
    for (std::size_t i = 0; i < eig.size(); ++i) {
      max_delta = std::max(max_delta, std::abs(eig[i] - analytic[i]));
    }
    if (max_delta > kAgreeTol) {
      std::ostringstream msg;
      msg << "state " << k << " (rank " << rank << ", " << dim_a << "x" << dim_b
          << "): max |delta| " << format_shortest(max_delta);
      oracle_failure = msg.str();
    }
  }
  if (oracle_failure.empty()) {
    std::cout << "[PASS] density-matrix oracle agrees with closed forms on " << kSpotChecks
              << " rotated embeddings (max |delta| " << format_shortest(max_delta) << ")\n";
  } else {
    std::cout << "[FAIL] density-matrix oracle disagreement: " << oracle_failure << '\n';
    all_pass = false;
  }

  if (o.self_test_violation) {
    std::cout << "[FAIL] injected self-test violation (requested via flag)\n";
    all_pass = false;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement measures, LOCC comparability, and equi-entangled curves"};
  app.require_subcommand(1);

  MeasuresOpts mo;
  CLI::App* measures_cmd =
      app.add_subcommand("measures", "Entanglement measures of one Schmidt vector");
  measures_cmd->add_option("coeffs", mo.coeffs, "comma-separated squared Schmidt coefficients")
      ->required();
  measures_cmd->add_flag("--normalize", mo.normalize, "rescale input to sum 1");
  measures_cmd->add_option("--tol", mo.tol, "normalization tolerance");
  measures_cmd->add_option("--out", mo.out, "write a one-row CSV here");

  CompareOpts co;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "LOCC comparability classification of two vectors");
  compare_cmd->add_option("a", co.coeffs_a, "first vector")->required();
  compare_cmd->add_option("b", co.coeffs_b, "second vector")->required();
  compare_cmd->add_flag("--normalize", co.normalize, "rescale inputs to sum 1");
  compare_cmd->add_option("--tol", co.tol, "prefix-sum comparison tolerance");

  SearchOpts so;
  CLI::App* search_cmd =
      app.add_subcommand("search", "Random search for entropy-vs-measure ordering flips");
  search_cmd->add_option("--rank", so.cfg.rank, "Schmidt rank of sampled vectors")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--samples", so.cfg.samples, "number of independent pairs")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", so.cfg.seed, "generator seed");
  search_cmd->add_option("--measure", so.measure_name, "measure to pit against entropy")
      ->check(CLI::IsMember({"concurrence", "negativity"}));
  search_cmd->add_option("--margin", so.cfg.strict_margin, "strict ordering margin")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--perturb", so.cfg.perturb,
                         "jitter magnitude; pairs become (v, perturbed v)")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--threads", so.cfg.threads, "worker threads (output independent)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", so.out, "CSV output path")->required();

  CurveOpts uo;
  CLI::App* curve_cmd =
      app.add_subcommand("curve", "Trace equi-entangled rank-3 curves at fixed entropies");
  curve_cmd->add_option("--entropy", uo.entropies, "target entropy per class, e-bits")
      ->required()
      ->delimiter(',');
  curve_cmd->add_option("--points", uo.points, "grid points per class")
      ->check(CLI::Range(static_cast<std::size_t>(2), std::numeric_limits<std::size_t>::max()));
  curve_cmd->add_option("--out", uo.out, "CSV output path")->required();
  curve_cmd->add_option("--svg", uo.svg, "optional SVG plot path");

  CrossingOpts xo;
  CLI::App* crossing_cmd = app.add_subcommand(
      "crossing", "Quadruple of states whose concurrence and entropy orderings cross");
  crossing_cmd->add_option("e_low", xo.e_low, "entropy of the lower class, e-bits")->required();
  crossing_cmd->add_option("e_high", xo.e_high, "entropy of the upper class, e-bits")->required();
  crossing_cmd->add_option("--out", xo.out, "optional CSV output path");

  VerifyOpts vo;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Property checks: monotonicity and oracle agreement");
  verify_cmd->add_option("--rank", vo.rank, "Schmidt rank of sampled vectors")
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(64)));
  verify_cmd->add_option("--trials", vo.trials, "number of comparable pairs")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vo.seed, "generator seed");
  verify_cmd->add_flag("--self-test-violation", vo.self_test_violation,
                       "force one failing property to exercise the failure path")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
    if (*measures_cmd) return run_measures(mo);
    if (*compare_cmd) return run_compare(co);
    if (*search_cmd) return run_search(so);
    if (*curve_cmd) return run_curve(uo);
    if (*crossing_cmd) return run_crossing(xo);
    if (*verify_cmd) return run_verify(vo);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ektool::ParseFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoFailure& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 3;
  } catch (const PropertyViolation& e) {
    std::cerr << "property violation: " << e.what() << '\n';
    return 1;
  } catch (const entanglekit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
