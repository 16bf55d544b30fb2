#include "lacunaria/cli.hpp"

#include "lacunaria/frame_analysis.hpp"
#include "lacunaria/gamma_set.hpp"
#include "lacunaria/lacunary_poly.hpp"
#include "lacunaria/obstructions.hpp"
#include "lacunaria/parallel.hpp"
#include "lacunaria/uniqueness.hpp"
#include "lacunaria/vandermonde.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace lacunaria::cli {

namespace {

using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_string(values[i]);
  return out;
}

ordered_json rational_array(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

ordered_json root_json(const RootInterval& r) {
  return {{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"exact", r.exact}};
}

ordered_json measure_json(const DiscreteMeasure& m) {
  ordered_json atoms = ordered_json::array();
  for (const auto& a : m.atoms()) {
    atoms.push_back({{"location", to_string(a.location)}, {"re", to_string(a.weight.re)}, {"im", to_string(a.weight.im)}});
  }
  return atoms;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table measure_table(const DiscreteMeasure& m) {
  Table t{{"location", "re", "im"}, {}};
  for (const auto& a : m.atoms()) t.rows.push_back({to_string(a.location), to_string(a.weight.re), to_string(a.weight.im)});
  return t;
}

// What one subcommand produced.
struct Outcome {
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  ordered_json grid = ordered_json::object();
  std::optional<Table> table;
  int exit_code = kOk;
  std::string plot_svg;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string to_csv(const Outcome& o) {
  std::ostringstream out;
  if (o.table) {
    for (std::size_t i = 0; i < o.table->header.size(); ++i) out << (i ? "," : "") << csv_field(o.table->header[i]);
    out << '\n';
    for (const auto& row : o.table->rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    return out.str();
  }
  out << "key,value\n";
  for (const auto& [key, value] : o.results.items()) out << csv_field(key) << ',' << csv_field(scalar_text(value)) << '\n';
  return out.str();
}

std::string sigma_svg(const FrameEstimate& e, const std::string& title) {
  const double w = 640;
  const double h = 400;
  const double margin = 50;
  double t0 = e.profile.front().t;
  double t1 = e.profile.back().t;
  if (t1 <= t0) t1 = t0 + 1;
  double top = 0;
  for (const auto& s : e.profile) top = std::max(top, s.sigma_min);
  if (top <= 0) top = 1;
  auto x = [&](double t) { return margin + (w - 2 * margin) * (t - t0) / (t1 - t0); };
  auto y = [&](double v) { return h - margin - (h - 2 * margin) * v / top; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << margin << "\" y=\"25\" font-size=\"14\">" << title << "</text>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << y(0) << "\" x2=\"" << w - margin << "\" y2=\"" << y(0)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << y(0)
      << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << w - margin << "\" y=\"" << h - 15 << "\" font-size=\"12\">t</text>\n";
  svg << "<text x=\"5\" y=\"" << margin - 10 << "\" font-size=\"12\">sigma_min</text>\n";
  svg << "<text x=\"" << margin << "\" y=\"" << h - 30 << "\" font-size=\"10\">" << format_double(t0) << "</text>\n";
  svg << "<text x=\"" << w - margin - 30 << "\" y=\"" << h - 30 << "\" font-size=\"10\">" << format_double(t1)
      << "</text>\n";
  svg << "<text x=\"5\" y=\"" << y(top) + 4 << "\" font-size=\"10\">" << format_double(top) << "</text>\n";
  svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (const auto& s : e.profile) svg << x(s.t) << ',' << y(s.sigma_min) << ' ';
  svg << "\"/>\n";
  for (const auto& c : e.certificates) {
    svg << "<circle cx=\"" << x(to_double(c.root.midpoint())) << "\" cy=\"" << y(0)
        << "\" r=\"5\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

ordered_json witness_json(const NonUniquenessWitness& w) {
  return {{"M", w.exponent_set.to_string()}, {"polynomial", w.polynomial.to_string()}};
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& q : parse_rational_list(text)) out.push_back(to_double(q));
  return out;
}

// "loc:re:im;loc:re:im"
DiscreteMeasure parse_atoms(const std::string& text) {
  std::vector<Atom> atoms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::vector<std::string> parts;
    std::stringstream is(item);
    std::string p;
    while (std::getline(is, p, ':')) parts.push_back(p);
    if (parts.size() != 3) throw std::invalid_argument("atoms must be \"location:re:im\" separated by ';'");
    atoms.push_back({parse_rational(parts[0]), {parse_rational(parts[1]), parse_rational(parts[2])}});
  }
  if (atoms.empty()) throw std::invalid_argument("no atoms given");
  return DiscreteMeasure(std::move(atoms));
}

std::string atoms_text(const DiscreteMeasure& m) {
  std::string out;
  for (const auto& a : m.atoms()) {
    if (!out.empty()) out += ';';
    out += to_string(a.location) + ':' + to_string(a.weight.re) + ':' + to_string(a.weight.im);
  }
  return out;
}

}  // namespace

Output run(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  Output result;

  CLI::App app{"Weighted exponential systems E(Z, Gamma) and lacunary polynomials", "lacunaria"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with option defaults (e.g. frame-bounds.step=0.001)");

  std::string format = "json";
  std::string plot_path;
  std::size_t threads = 0;
  std::uint64_t seed = 0;
  bool no_timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--plot", plot_path, "Write an SVG plot (frame-bounds)");
  app.add_option("--threads", threads, "Worker thread cap (default: LACUNARIA_THREADS or all cores)");
  app.add_option("--seed", seed, "Seed for randomized commands");
  app.add_flag("--no-timing", no_timing, "Report runtime_ms as 0 so identical runs are byte-equal");

  // option storage shared by the subcommands
  std::string gamma_text;
  std::string points_text;
  std::string poly_text;
  std::string interval_text;
  std::string window_text;
  std::string alpha_text;
  std::string atoms_arg;
  std::string which = "fr";
  std::string r_list = "0.2,0.1,0.05";
  unsigned cap = 0;
  unsigned degree_cap = kDefaultDegreeCap;
  std::size_t n = 0;
  std::size_t trials = 100;
  std::size_t max_order = 0;
  int n_range = 8;
  int mollifier_n_range = 64;
  double step = default_grid_step();
  double resolution = 1e-3;
  double witness_grid = 1.0 / 256;
  bool want_det = false;
  bool want_tp = false;

  std::map<CLI::App*, std::function<Outcome()>> handlers;
  auto gamma_opt = [&](CLI::App* sub) { sub->add_option("--gamma", gamma_text, "Exponent set, e.g. 0,2,5")->required(); };
  auto gamma = [&] { return GammaSet::parse(gamma_text); };

  auto* r_gamma_cmd = app.add_subcommand("r-gamma", "The invariant r(Gamma)");
  gamma_opt(r_gamma_cmd);
  handlers[r_gamma_cmd] = [&] {
    Outcome o;
    const auto g = gamma();
    const auto split = parity_split(g);
    o.inputs["gamma"] = g.to_string();
    o.results["r"] = to_string(r_gamma(g));
    o.results["even"] = split.even.size();
    o.results["odd"] = split.odd.size();
    return o;
  };

  auto* descartes_cmd = app.add_subcommand("descartes", "Descartes bound against the exact positive root count");
  descartes_cmd->add_option("--poly", poly_text, "Polynomial such as \"1*x^0 + -2*x^3\"")->required();
  descartes_cmd->add_option("--degree-cap", degree_cap, "Largest degree for the exact count");
  handlers[descartes_cmd] = [&] {
    Outcome o;
    const auto p = LacunaryPolynomial::parse(poly_text);
    o.inputs["poly"] = p.to_string();
    o.inputs["degree_cap"] = std::to_string(degree_cap);
    const auto bound = descartes_bound(p);
    const auto count = count_positive_roots(p, degree_cap);
    o.results["descartes_bound"] = bound;
    o.results["positive_roots"] = count;
    o.results["equality"] = bound == count;
    ordered_json roots = ordered_json::array();
    for (const auto& r : isolate_positive_roots(p, default_root_width(), degree_cap)) roots.push_back(root_json(r));
    o.results["roots"] = roots;
    return o;
  };

  auto* vdm_cmd = app.add_subcommand("vandermonde", "Exact generalized Vandermonde determinant and total positivity");
  vdm_cmd->add_option("--nodes", points_text, "Nodes, e.g. 1,2,3")->required();
  gamma_opt(vdm_cmd);
  vdm_cmd->add_flag("--det", want_det, "Report the determinant (default when no check is requested)");
  vdm_cmd->add_flag("--tp-check", want_tp, "Check that every minor is positive");
  vdm_cmd->add_option("--max-order", max_order, "Largest minor order for --tp-check (default: N)");
  handlers[vdm_cmd] = [&] {
    Outcome o;
    const auto nodes = parse_rational_list(points_text);
    const auto g = gamma();
    const GeneralizedVandermonde v(nodes, g);
    o.inputs["nodes"] = join(nodes);
    o.inputs["gamma"] = g.to_string();
    if (want_det || !want_tp) {
      const auto det = det_exact(v);
      o.results["det"] = to_string(det);
      o.results["invertible"] = det != 0;
      if (const auto nv = null_vector(v)) {
        o.results["null_vector"] = rational_array(*nv);
        o.results["witness"] = witness_polynomial(g, *nv).to_string();
      }
    }
    if (want_tp) {
      const std::size_t order = max_order == 0 ? v.size() : max_order;
      o.inputs["max_order"] = std::to_string(order);
      o.results["totally_positive"] = verify_total_positivity(v, order);
      o.results["minors_checked"] = minor_count(v.size(), order);
    }
    return o;
  };

  auto* roots_cmd = app.add_subcommand("scan-det-roots", "Exceptional shifts: real roots of det V(s, ..., s+N-1)");
  gamma_opt(roots_cmd);
  roots_cmd->add_option("--window", window_text, "Open window lo,hi")->required();
  handlers[roots_cmd] = [&] {
    Outcome o;
    const auto g = gamma();
    const auto w = parse_rational_list(window_text);
    if (w.size() != 2 || !(w[0] < w[1])) throw std::invalid_argument("window must be \"lo,hi\" with lo < hi");
    o.inputs["gamma"] = g.to_string();
    o.inputs["window"] = join(w);
    o.results["det_polynomial"] = det_in_s(g).poly.to_string('s');
    ordered_json roots = ordered_json::array();
    for (const auto& r : exceptional_set(g, w[0], w[1])) roots.push_back(root_json(r));
    o.results["roots"] = roots;
    o.grid["root_width"] = to_string(default_root_width());
    return o;
  };

  auto* ucheck_cmd = app.add_subcommand("uniqueness-check", "Is the point set a uniqueness set for every P(M)?");
  ucheck_cmd->add_option("--points", points_text, "Distinct points, e.g. -1,2")->required();
  ucheck_cmd->add_option("--cap", cap, "Largest exponent in M")->required();
  handlers[ucheck_cmd] = [&] {
    Outcome o;
    const auto pts = parse_rational_list(points_text);
    o.inputs["points"] = join(pts);
    o.inputs["cap"] = std::to_string(cap);
    const auto r = is_uniqueness_set(pts, cap);
    o.results["unique"] = r.unique;
    o.results["subsets_checked"] = r.subsets_checked;
    if (r.witness) o.results["witness"] = witness_json(*r.witness);
    return o;
  };

  auto* usearch_cmd = app.add_subcommand("uniqueness-search", "Random non-alternating sign patterns");
  usearch_cmd->add_option("--n", n, "Number of points")->required();
  usearch_cmd->add_option("--cap", cap, "Largest exponent in M")->required();
  usearch_cmd->add_option("--trials", trials, "Number of random point sets");
  handlers[usearch_cmd] = [&] {
    Outcome o;
    o.inputs["n"] = std::to_string(n);
    o.inputs["cap"] = std::to_string(cap);
    o.inputs["trials"] = std::to_string(trials);
    const auto s = search_counterexample(n, cap, trials, seed);
    o.results["trials"] = s.trials;
    o.results["determinants_checked"] = s.determinants_checked;
    ordered_json failures = ordered_json::array();
    for (const auto& f : s.failures) {
      failures.push_back({{"pattern", f.pattern}, {"points", rational_array(f.points)}, {"witness", witness_json(f.witness)}});
    }
    o.results["failure_count"] = s.failures.size();
    o.results["failures"] = failures;
    return o;
  };

  auto* obstruction_cmd = app.add_subcommand("obstruction", "Trigonometric f with f^(gamma) = 0 on Z, and its measure");
  gamma_opt(obstruction_cmd);
  obstruction_cmd->add_option("--n-range", n_range, "Residual check over |n| <= n-range");
  handlers[obstruction_cmd] = [&] {
    Outcome o;
    const auto g = gamma();
    o.inputs["gamma"] = g.to_string();
    o.inputs["n_range"] = std::to_string(n_range);
    const auto f = solve_lemma4(g);
    const auto m = to_measure(f);
    o.results["case"] = to_string(f.parity_case);
    o.results["alphas"] = rational_array(f.alphas);
    o.results["support_radius"] = to_string(f.support_radius());
    o.results["residual"] = residual_interpolation(f, n_range);
    o.results["measure_residual"] = orthogonality_residual(m, g, n_range);
    o.results["measure"] = measure_json(m);
    o.table = measure_table(m);
    return o;
  };

  auto* grid_cmd = app.add_subcommand("grid-measure", "Orthogonal measure on alpha, alpha+1, ..., alpha+N");
  gamma_opt(grid_cmd);
  grid_cmd->add_option("--alpha", alpha_text, "Rational base point")->required();
  handlers[grid_cmd] = [&] {
    Outcome o;
    const auto g = gamma();
    const Rational alpha = parse_rational(alpha_text);
    o.inputs["gamma"] = g.to_string();
    o.inputs["alpha"] = to_string(alpha);
    const auto m = grid_null_measure(g, alpha);
    o.results["exact_zero_moments"] = moments_vanish_exactly(m, g);
    o.results["residual"] = orthogonality_residual(m, g, 8);
    o.results["measure"] = measure_json(m);
    o.table = measure_table(m);
    return o;
  };

  auto* frame_cmd = app.add_subcommand("frame-bounds", "Frame bounds of E(Z, Gamma) on L^2(a, b)");
  gamma_opt(frame_cmd);
  frame_cmd->add_option("--interval", interval_text, "a,b")->required();
  frame_cmd->add_option("--step", step, "Grid step in t");
  handlers[frame_cmd] = [&] {
    Outcome o;
    const auto g = gamma();
    const auto iv = Interval::parse(interval_text);
    o.inputs["gamma"] = g.to_string();
    o.inputs["interval"] = iv.to_string();
    o.inputs["step"] = format_double(step);
    const auto e = frame_bounds(g, iv, step);
    o.results["verdict"] = to_string(e.verdict);
    o.results["lower"] = e.lower;
    o.results["upper"] = e.upper;
    o.results["min_location"] = e.min_location;
    o.results["exceeds_length"] = e.exceeds_length;
    ordered_json regimes = ordered_json::array();
    for (const auto& r : e.regimes) regimes.push_back({{"k", r.k}, {"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}});
    o.results["regimes"] = regimes;
    ordered_json certs = ordered_json::array();
    for (const auto& c : e.certificates) {
      auto j = root_json(c.root);
      j["k"] = c.k;
      j["polynomial"] = c.polynomial.to_string('t');
      certs.push_back(j);
    }
    o.results["certificates"] = certs;
    o.grid["step"] = e.grid_step;
    o.grid["refinements"] = 2;
    o.grid["refinement_factor"] = 3;
    o.grid["samples"] = e.profile.size();
    Table t{{"t", "sigma_min", "sigma_max"}, {}};
    for (const auto& s : e.profile) t.rows.push_back({format_double(s.t), format_double(s.sigma_min), format_double(s.sigma_max)});
    o.table = std::move(t);
    if (!e.profile.empty()) o.plot_svg = sigma_svg(e, "sigma_min(t), Gamma = {" + g.to_string() + "}, (" + iv.to_string() + ")");
    if (e.verdict == Verdict::inconclusive) o.exit_code = kInconclusive;
    return o;
  };

  auto* radius_cmd = app.add_subcommand("radius", "Completeness and frame radii");
  gamma_opt(radius_cmd);
  radius_cmd->add_option("--which", which, "fr, cr or crc")->check(CLI::IsMember({"fr", "cr", "crc"}));
  radius_cmd->add_option("--resolution", resolution, "Bisection resolution for fr");
  radius_cmd->add_option("--step", step, "Grid step for the frame scans");
  handlers[radius_cmd] = [&] {
    Outcome o;
    const auto g = gamma();
    o.inputs["gamma"] = g.to_string();
    o.inputs["which"] = which;
    if (which == "fr") {
      o.inputs["resolution"] = format_double(resolution);
      o.inputs["step"] = format_double(step);
      o.results["fr"] = frame_radius_scan(g, resolution, step);
      o.grid["resolution"] = resolution;
      o.grid["step"] = step;
    } else if (which == "cr") {
      o.results["cr"] = to_string(cr_scan(g));
    } else {
      if (!g.contains_zero()) throw std::invalid_argument("crc needs 0 in Gamma");
      o.results["crc"] = to_string(r_gamma(g));
    }
    o.results["r"] = to_string(r_gamma(g));
    return o;
  };

  auto* witness_cmd = app.add_subcommand("witness", "Nonzero F in L^2(a, b) orthogonal to E(Z, Gamma)");
  gamma_opt(witness_cmd);
  witness_cmd->add_option("--interval", interval_text, "a,b with b - a > #Gamma")->required();
  witness_cmd->add_option("--grid", witness_grid, "Sampling resolution for choosing I");
  handlers[witness_cmd] = [&] {
    Outcome o;
    const auto g = gamma();
    const auto iv = Interval::parse(interval_text);
    o.inputs["gamma"] = g.to_string();
    o.inputs["interval"] = iv.to_string();
    o.inputs["grid"] = format_double(witness_grid);
    const auto w = noncompleteness_witness(g, iv, witness_grid);
    o.results["piece"] = {w.piece.first, w.piece.second};
    o.results["norm_squared"] = w.norm_squared;
    o.results["last_norm_squared"] = w.last_norm_squared;
    o.results["max_pairing"] = w.max_pairing;
    o.results["min_abs_det"] = w.min_abs_det;
    o.results["max_abs_det"] = w.max_abs_det;
    o.grid["grid"] = witness_grid;
    o.grid["samples"] = w.samples.size();
    o.grid["quadrature_nodes_per_unit"] = 64;
    Table t{{"t"}, {}};
    for (std::size_t j = 0; j < w.components.size(); ++j) t.header.push_back("F_" + std::to_string(j));
    for (std::size_t i = 0; i < w.samples.size(); ++i) {
      std::vector<std::string> row{format_double(w.samples[i])};
      for (const auto& c : w.components) row.push_back(format_double(c[i]));
      t.rows.push_back(std::move(row));
    }
    o.table = std::move(t);
    return o;
  };

  auto* mollified_cmd = app.add_subcommand("mollified-ratio", "Frame ratio of g * sinc(pi r x) for an orthogonal measure");
  gamma_opt(mollified_cmd);
  mollified_cmd->add_option("--r", r_list, "Mollifier widths, e.g. 0.2,0.1,0.05");
  mollified_cmd->add_option("--n-range", mollifier_n_range, "Sum over |n| <= n-range");
  auto* alpha_opt = mollified_cmd->add_option("--alpha", alpha_text, "Use the grid measure at alpha");
  mollified_cmd->add_option("--atoms", atoms_arg, "Explicit measure \"loc:re:im;...\"")->excludes(alpha_opt);
  handlers[mollified_cmd] = [&] {
    Outcome o;
    const auto g = gamma();
    const auto rs = parse_double_list(r_list);
    if (rs.empty()) throw std::invalid_argument("at least one r is required");
    o.inputs["gamma"] = g.to_string();
    std::string rs_text;
    for (double r : rs) rs_text += (rs_text.empty() ? "" : ",") + format_double(r);
    o.inputs["r"] = rs_text;
    o.inputs["n_range"] = std::to_string(mollifier_n_range);
    DiscreteMeasure m;
    if (!atoms_arg.empty()) {
      m = parse_atoms(atoms_arg);
      o.inputs["atoms"] = atoms_text(m);
      o.results["measure_source"] = "atoms";
    } else if (!alpha_text.empty()) {
      const Rational alpha = parse_rational(alpha_text);
      m = grid_null_measure(g, alpha);
      o.inputs["alpha"] = to_string(alpha);
      o.results["measure_source"] = "grid";
    } else {
      m = to_measure(solve_lemma4(g));
      o.results["measure_source"] = "obstruction";
    }
    o.results["measure"] = measure_json(m);
    ordered_json ratios = ordered_json::array();
    std::vector<double> values;
    Table t{{"r", "ratio"}, {}};
    for (double r : rs) {
      values.push_back(mollified_frame_ratio(m, g, r, mollifier_n_range));
      ratios.push_back({{"r", r}, {"ratio", values.back()}});
      t.rows.push_back({format_double(r), format_double(values.back())});
    }
    o.results["ratios"] = ratios;
    bool decreasing = true;
    ordered_json quotients = ordered_json::array();
    for (std::size_t i = 1; i < values.size(); ++i) {
      decreasing = decreasing && values[i] < values[i - 1];
      quotients.push_back(values[i - 1] > 0 ? ordered_json(values[i] / values[i - 1]) : ordered_json(nullptr));
    }
    o.results["strictly_decreasing"] = decreasing;
    o.results["successive_quotients"] = quotients;
    std::vector<double> sorted = rs;
    std::sort(sorted.rbegin(), sorted.rend());
    const auto fit = fit_mollifier_bound(4, sorted, mollifier_n_range);
    o.results["mollifier_bound"] = {{"C", fit.constant}, {"max_j", 4}, {"holds", fit.holds}};
    o.table = std::move(t);
    return o;
  };

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kInputError;
    return result;
  }

  if (threads > 0) set_thread_limit(threads);

  CLI::App* chosen = app.get_subcommands().front();
  try {
    if (!plot_path.empty() && chosen != frame_cmd) throw std::invalid_argument("--plot is only supported by frame-bounds");
    Outcome o = handlers.at(chosen)();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    if (!plot_path.empty()) {
      std::ofstream file(plot_path);
      if (!file) throw std::runtime_error("cannot write plot to " + plot_path);
      file << o.plot_svg;
    }

    if (format == "csv") {
      result.out = to_csv(o);
    } else {
      ordered_json report;
      report["command"] = chosen->get_name();
      report["inputs"] = o.inputs;
      report["results"] = o.results;
      report["provenance"] = {{"version", kVersion},
                              {"seed", seed},
                              {"tolerances",
                               {{"frame_failure_threshold", kFailureThreshold},
                                {"orthogonality", 1e-9},
                                {"root_width", to_string(default_root_width())}}},
                              {"grid", o.grid}};
      report["runtime_ms"] = no_timing ? 0 : elapsed.count();
      result.out = report.dump(2) + "\n";
    }
    result.exit_code = o.exit_code;
  } catch (const std::invalid_argument& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kInputError;
  } catch (const std::domain_error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kInputError;
  } catch (const std::runtime_error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kInputError;
  }
  return result;
}

}  // namespace lacunaria::cli
