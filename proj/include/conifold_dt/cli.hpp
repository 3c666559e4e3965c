#pragma once

// Command-line front end. run() is the whole tool; main() only forwards
// argv, which keeps every subcommand testable in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "flop.hpp"
#include "json_io.hpp"
#include "mmalgebra.hpp"
#include "partial.hpp"
#include "qseries.hpp"
#include "strip.hpp"
#include "verify.hpp"

namespace conifold_dt::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2, verification_failure = 3 };

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw CLI::ValidationError("--subset", "'" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

inline std::vector<std::pair<int, int>> parse_blocks(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--blocks", "'" + item + "' is not of the form m_k:n_k");
    try {
      std::size_t a = 0, b = 0;
      const int mk = std::stoi(item.substr(0, colon), &a);
      const int nk = std::stoi(item.substr(colon + 1), &b);
      if (a != colon || b != item.size() - colon - 1) throw std::invalid_argument(item);
      out.emplace_back(mk, nk);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--blocks", "'" + item + "' is not of the form m_k:n_k");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--blocks", "no blocks given");
  return out;
}

inline Json edge_types_json(const Triangulation& t) {
  Json types = Json::array();
  for (int i = 1; i <= t.diagram().interior_edges(); ++i) types.push_back(edge_type(t, i));
  return types;
}

inline std::string sign_string(const Triangulation& t) {
  std::string s;
  for (int i = 1; i <= t.diagram().interior_edges(); ++i) s += edge_type(t, i) > 0 ? '+' : '-';
  return s;
}

inline std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact total Donaldson-Thomas partition functions of generalised conifolds",
               "conifold-dt"};
  app.require_subcommand(1);

  int m = -1, n = -1, order = default_truncation_order, max_size = 10;
  unsigned threads = 0;
  std::string format = "json", subset_text, blocks_text;
  bool topological = false;
  std::optional<std::string> subset_opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  };
  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Top-row segments")->required();
    sub->add_option("--n", n, "Bottom-row segments")->required();
  };

  auto* count = app.add_subcommand("count", "Faces, interior edges, triangulations, Euler characteristic");
  add_mn(count);
  auto* enumerate = app.add_subcommand("enum", "All triangulations with their edge types");
  add_mn(enumerate);
  auto* zprime = app.add_subcommand("zprime", "Reduced partition function of one triangulation");
  add_mn(zprime);
  zprime->add_option("--subset", subset_text, "Top-based triangles, e.g. 1,3")->required();
  auto* ztot = app.add_subcommand("ztot", "Total partition function and homogeneity report");
  add_mn(ztot);
  ztot->add_flag("--topological", topological, "Include the M(1,q)^{chi/2} factor per resolution");
  auto* degree = app.add_subcommand("degree", "Degree from the binomial and probabilistic formulas");
  add_mn(degree);
  auto* sigma = app.add_subcommand("sigma", "Signature closed form versus brute force, N = m + n");
  add_mn(sigma);
  auto* flop = app.add_subcommand("flop", "Change-of-variables total for the C_{1,n} flop chain");
  flop->add_option("--n", n, "Bottom-row segments")->required();
  auto* partial = app.add_subcommand("partial", "Partial-resolution factorization");
  add_mn(partial);
  partial->add_option("--blocks", blocks_text, "Blocks m1:n1,m2:n2,...")->required();
  auto* expand = app.add_subcommand("expand", "q-expansion of the total (or one triangulation)");
  add_mn(expand);
  expand->add_option("--subset", subset_opt, "Expand this triangulation instead of the total");
  expand->add_option("--order", order, "Truncation order K")->check(CLI::Range(0, 64));
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--max-size", max_size, "Largest m + n swept")->check(CLI::Range(2, 20));

  for (auto* sub : {count, enumerate, zprime, ztot, degree, sigma, flop, partial, expand, verify})
    add_common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return usage_error;
  }

  const bool text = format == "text";
  const ExecutionOptions exec{threads};
  auto emit = [&](const Json& doc) { out << doc.dump(2) << "\n"; };

  try {
    if (count->parsed()) {
      const StripCounts c = counts(StripDiagram(m, n));
      if (text) {
        out << "faces " << c.faces << "\ninterior_edges " << c.interior_edges
            << "\ntriangulations " << c.triangulation_count.get_str() << "\neuler_char "
            << c.euler_char << "\n";
      } else {
        emit(Json{{"m", m},
                  {"n", n},
                  {"faces", c.faces},
                  {"interior_edges", c.interior_edges},
                  {"triangulation_count", c.triangulation_count.get_str()},
                  {"euler_char", c.euler_char}});
      }
      return ok;
    }

    if (enumerate->parsed()) {
      const StripDiagram d(m, n);
      Json list = Json::array();
      for_each_triangulation(d, [&](const Triangulation& t) {
        if (text)
          out << detail::set_string(t.top_set()) << ' ' << detail::sign_string(t) << "\n";
        else
          list.push_back(Json{{"top_set", t.top_set()}, {"edge_types", detail::edge_types_json(t)}});
      });
      if (!text)
        emit(Json{{"m", m},
                  {"n", n},
                  {"count", counts(d).triangulation_count.get_str()},
                  {"triangulations", std::move(list)}});
      return ok;
    }

    if (zprime->parsed()) {
      const Triangulation t(StripDiagram(m, n), detail::parse_int_list(subset_text));
      const ExponentMap z = reduced_partition(t);
      if (text) {
        out << render_text(z) << "\n";
      } else {
        Json doc = to_json(z);
        doc["top_set"] = t.top_set();
        emit(doc);
      }
      return ok;
    }

    if (ztot->parsed()) {
      const StripDiagram d(m, n);
      const ExponentMap z = topological ? unreduced_total(d, exec) : total_partition(d, exec);
      const HomogeneityReport rep = check_homogeneity(z);
      if (text) {
        out << render_text(z) << "\n";
        out << (rep.is_homogeneous ? "homogeneous of degree " + rep.degree->get_str()
                                   : std::string("not homogeneous"))
            << "\n";
      } else {
        Json doc = to_json(z);
        doc["homogeneity"] = to_json(rep);
        emit(doc);
      }
      return ok;
    }

    if (degree->parsed()) {
      const StripDiagram d(m, n);
      const BigInt a = degree_formula(d), b = degree_probabilistic(d);
      if (text)
        out << "degree_formula " << a.get_str() << "\ndegree_probabilistic " << b.get_str()
            << "\n" << (a == b ? "agree" : "DISAGREE") << "\n";
      else
        emit(Json{{"m", m},
                  {"n", n},
                  {"degree_formula", a.get_str()},
                  {"degree_probabilistic", b.get_str()},
                  {"agree", a == b}});
      return a == b ? ok : verification_failure;
    }

    if (sigma->parsed()) {
      const StripDiagram d(m, n);
      const int N = d.faces();
      const BigInt closed = signature_closed_form(N, m);
      Json per_set = Json::array();
      bool all_equal = true;
      for (int i = 1; i <= N - 1; ++i)
        for (int j = i; j <= N - 1; ++j) {
          const BigInt brute = signature_bruteforce(N, m, {i, j});
          all_equal = all_equal && brute == closed;
          per_set.push_back(Json{{"set", {i, j}}, {"bruteforce", brute.get_str()}});
        }
      if (text)
        out << "closed_form " << closed.get_str() << "\n"
            << (all_equal ? "bruteforce agrees for every contiguous set"
                          : "bruteforce DISAGREES")
            << "\n";
      else
        emit(Json{{"N", N},
                  {"m", m},
                  {"closed_form", closed.get_str()},
                  {"position_independent", all_equal},
                  {"sets", std::move(per_set)}});
      return all_equal ? ok : verification_failure;
    }

    if (flop->parsed()) {
      const SignedFactorList f = flop_total(n);
      if (text)
        out << render_text(f) << "\n";
      else
        emit(to_json(f));
      return ok;
    }

    if (partial->parsed()) {
      const BlockDecomposition dec(StripDiagram(m, n), detail::parse_blocks(blocks_text));
      const Factorization f = factorize(dec, exec);
      if (text) {
        out << "Z'' = " << render_text(f.zpp) << "\n";
        for (const auto& b : f.block_factors)
          out << "C_{" << b.block.first << "," << b.block.second << "} at offset " << b.offset
              << ", multiplicity " << b.multiplicity.get_str() << ": " << render_text(b.total)
              << "\n";
      } else {
        emit(to_json(dec, f));
      }
      return ok;
    }

    if (expand->parsed()) {
      const StripDiagram d(m, n);
      const bool single = subset_opt.has_value();
      const ExponentMap z = single
                                ? reduced_partition(Triangulation(d, detail::parse_int_list(*subset_opt)))
                                : total_partition(d, exec);
      const QSeries s = evaluate_exponent_map(z, order);
      if (text) {
        out << to_string(s) << "\n";
      } else {
        emit(Json{{"m", m},
                  {"n", n},
                  {"source", single ? "triangulation" : "total"},
                  {"series", to_json(s)}});
      }
      return ok;
    }

    if (verify->parsed()) {
      VerifyOptions vo;
      vo.max_size = max_size;
      vo.exec = exec;
      const auto results = run_verification(vo);
      const bool all = std::all_of(results.begin(), results.end(),
                                   [](const PropertyResult& r) { return r.passed; });
      if (text) {
        for (const auto& r : results)
          out << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name
              << (r.detail.empty() ? "" : " [" + r.detail + "]") << "\n";
      } else {
        Json props = Json::array();
        for (const auto& r : results)
          props.push_back(Json{{"module", r.module},
                               {"name", r.name},
                               {"passed", r.passed},
                               {"detail", r.detail}});
        emit(Json{{"max_size", max_size}, {"passed", all}, {"properties", std::move(props)}});
      }
      return all ? ok : verification_failure;
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const conifold_dt::Error& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  }
  return usage_error;
}

}  // namespace conifold_dt::cli
