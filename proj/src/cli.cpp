#include "pinch/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "pinch/charp.hpp"
#include "pinch/classify.hpp"
#include "pinch/errors.hpp"
#include "pinch/gapset.hpp"
#include "pinch/report.hpp"

namespace pinch::cli {

using nlohmann::json;

std::pair<long long, long long> parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw SpecError("bad range '" + text + "'");
    }
    if (used != s.size()) throw SpecError("bad range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long long v = parse_int(text);
    return {v, v};
  }
  long long lo = parse_int(text.substr(0, dots));
  long long hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw SpecError("empty range '" + text + "'");
  return {lo, hi};
}

std::vector<long long> parse_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = parse_range(item);
    if (r.first != r.second) throw SpecError("expected a comma-separated list, got '" + text + "'");
    out.push_back(r.first);
  }
  if (out.empty()) throw SpecError("empty list");
  return out;
}

namespace {

// Runs jobs[i] into rows[i] in parallel. Row order is the job order, so
// output never depends on scheduling. The first exception (by index) is
// rethrown afterwards.
std::vector<SweepRow> run_jobs(const std::vector<std::function<SweepRow()>>& jobs) {
  std::vector<SweepRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto count = static_cast<long long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      rows[i] = jobs[i]();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string vec_list(const std::vector<ExponentVector>& vs, std::size_t limit = 4) {
  std::string s;
  for (std::size_t i = 0; i < vs.size() && i < limit; ++i) s += (i ? " " : "") + vs[i].to_string();
  if (vs.size() > limit) s += " ...";
  return s;
}

std::string nd_label(long long n, long long d) {
  return "n=" + std::to_string(n) + " d=" + std::to_string(d);
}

}  // namespace

std::vector<SweepRow> sweep_gap_equivalence(std::pair<long long, long long> n_range,
                                            std::pair<long long, long long> d_range, int t_max) {
  std::vector<std::function<SweepRow()>> jobs;
  for (long long n = n_range.first; n <= n_range.second; ++n) {
    for (long long d = d_range.first; d <= d_range.second; ++d) {
      for (const auto& m : veronese_generators(n, d).members) {
        jobs.push_back([n, d, m, t_max] {
          GapCheck c = verify_gap_equivalence(single_pinch(n, d, m), t_max);
          std::string detail = c.equal ? "equal" : "closed-only: " + vec_list(c.closed_form_only) +
                                                       "; oracle-only: " + vec_list(c.oracle_only);
          return SweepRow{"gaps", nd_label(n, d) + " m=" + m.to_string(), c.equal, detail};
        });
      }
    }
  }
  return run_jobs(jobs);
}

std::vector<SweepRow> sweep_socle(std::pair<long long, long long> d_range) {
  std::vector<std::function<SweepRow()>> jobs;
  for (long long d = std::max(3LL, d_range.first); d <= d_range.second; ++d) {
    jobs.push_back([d] {
      QuotientBasis qb = quotient_basis(single_pinch(2, d, ExponentVector{d - 1, 1}));
      auto a = a_invariant(qb);
      const ExponentVector expected{d - 1, d + 1};
      bool ok = static_cast<long long>(qb.basis.size()) == d && qb.socle.size() == 1 &&
                qb.socle.front() == expected && a && *a == 0;
      std::string detail = "basis " + std::to_string(qb.basis.size()) + ", socle {" + vec_list(qb.socle) +
                           "}, a-invariant " + (a ? std::to_string(*a) : std::string("n/a"));
      return SweepRow{"socle", "d=" + std::to_string(d), ok, detail};
    });
  }
  return run_jobs(jobs);
}

std::vector<SweepRow> sweep_frobenius(std::pair<long long, long long> n_range,
                                      std::pair<long long, long long> d_range,
                                      const std::vector<long long>& chars) {
  std::vector<std::function<SweepRow()>> jobs;
  for (long long n = n_range.first; n <= n_range.second; ++n) {
    for (long long d = d_range.first; d <= d_range.second; ++d) {
      for (const auto& m : veronese_generators(n, d).members) {
        if (m.max() == d) continue;
        for (long long p : chars) {
          jobs.push_back([n, d, m, p] {
            Characteristic ch(p);
            FrobeniusTrace tr = frobenius_on_cokernel(cokernel_model(single_pinch(n, d, m)), ch, 6 * d);
            bool ok;
            std::string detail;
            if (d == 2 && p != 2) {
              ok = tr.all_persist() && tr.family == FamilyVerdict::PersistsForever;
              detail = ok ? "all persist" : "some gap vector killed";
            } else {
              ok = tr.nilpotency_index == 1 && tr.family == FamilyVerdict::KilledInOneStep;
              detail = ok ? "killed in one step" : "not killed in one step";
            }
            detail += " (" + std::to_string(tr.steps.size()) + " traced)";
            return SweepRow{"frobenius", nd_label(n, d) + " m=" + m.to_string() + " p=" + std::to_string(p), ok,
                            detail};
          });
        }
      }
    }
  }
  return run_jobs(jobs);
}

std::vector<std::vector<ExponentVector>> multipinch_removal_sets(std::size_t n, Coord d) {
  auto cands = multipinch_candidates(n, d);
  std::vector<std::vector<ExponentVector>> out;
  const std::size_t k = cands.size();
  if (k == 0) return out;
  if (k <= 12) {
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<ExponentVector> set;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) set.push_back(cands[i]);
      }
      out.push_back(std::move(set));
    }
    return out;
  }
  for (std::size_t i = 0; i < k; ++i) out.push_back({cands[i]});
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<ExponentVector> set;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) set.push_back(cands[j]);
    }
    out.push_back(std::move(set));
  }
  out.push_back(cands);
  return out;
}

std::vector<SweepRow> sweep_multipinch(std::pair<long long, long long> n_range,
                                       std::pair<long long, long long> d_range,
                                       const std::vector<long long>& chars) {
  std::vector<std::function<SweepRow()>> jobs;
  for (long long n = n_range.first; n <= n_range.second; ++n) {
    for (long long d = std::max(3LL, d_range.first); d <= d_range.second; ++d) {
      for (auto& removed : multipinch_removal_sets(n, d)) {
        jobs.push_back([n, d, removed, chars] {
          SemigroupSpec spec = pinch_spec(n, d, removed, true);
          const Coord bound = multipinch_coordinate_bound(n, d);
          auto beyond = multipinch_gaps_beyond_bound(spec, 2 * bound);
          bool ok = beyond.empty();
          std::string detail = beyond.empty() ? "no gap with a coordinate >= " + std::to_string(bound)
                                              : "gap beyond bound: " + vec_list(beyond);
          for (long long p : chars) {
            Characteristic ch(p);
            int idx = multipinch_nilpotency_index(spec, ch);
            int limit = ceil_log(bound, ch.value());
            ok = ok && idx <= limit;
            detail += "; p=" + std::to_string(p) + " index " + std::to_string(idx) + "<=" + std::to_string(limit);
          }
          return SweepRow{"multipinch", nd_label(n, d) + " removed={" + vec_list(removed, 64) + "}", ok, detail};
        });
      }
    }
  }
  return run_jobs(jobs);
}

namespace {

struct SpecFlags {
  long long n = 0;
  long long d = 0;
  std::string pinch;
  std::vector<std::string> remove;
  bool multipinch = false;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--n", f.n, "number of variables (n >= 2)")->required();
  cmd->add_option("--d", f.d, "Veronese degree (d >= 2)")->required();
  cmd->add_option("--pinch", f.pinch, "single removed vector, e.g. 1,1,1");
  cmd->add_option("--remove", f.remove, "removed vector(s); repeat or separate with ';'");
  cmd->add_flag("--multipinch", f.multipinch, "treat --remove as a multipinch removal set");
}

SemigroupSpec spec_from_flags(const SpecFlags& f) {
  if (f.n < 2) throw SpecError("need n >= 2");
  if (f.d < 2) throw SpecError("need d >= 2");
  if (!f.pinch.empty() && !f.remove.empty()) throw SpecError("use either --pinch or --remove, not both");
  if (!f.pinch.empty() && f.multipinch) throw SpecError("--multipinch applies to --remove");
  std::vector<ExponentVector> removed;
  if (!f.pinch.empty()) removed.push_back(parse_exponent_vector(f.pinch));
  for (const auto& chunk : f.remove) {
    std::stringstream ss(chunk);
    std::string item;
    while (std::getline(ss, item, ';')) {
      if (!item.empty()) removed.push_back(parse_exponent_vector(item));
    }
  }
  return pinch_spec(static_cast<std::size_t>(f.n), f.d, std::move(removed), f.multipinch);
}

void check_format(const std::string& format) {
  if (format != "text" && format != "json") throw SpecError("--format must be text or json");
}

json rows_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"sweep", r.sweep}, {"item", r.item}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pinchver: pinched and multi-pinched Veronese semigroups"};
  app.require_subcommand(1);

  SpecFlags analyze_flags;
  std::string analyze_chars;
  std::string analyze_format = "text";
  auto* analyze_cmd = app.add_subcommand("analyze", "gap set, classification and F-singularity report");
  add_spec_flags(analyze_cmd, analyze_flags);
  analyze_cmd->add_option("--char", analyze_chars, "comma-separated primes (default 2)");
  analyze_cmd->add_option("--format", analyze_format, "text|json");

  SpecFlags gaps_flags;
  long long gaps_bound = -1;
  std::string gaps_format = "text";
  auto* gaps_cmd = app.add_subcommand("gaps", "list gap vectors up to a degree bound");
  add_spec_flags(gaps_cmd, gaps_flags);
  gaps_cmd->add_option("--bound", gaps_bound, "maximum degree listed (default 6d)");
  gaps_cmd->add_option("--format", gaps_format, "text|json");

  std::string v_n, v_d, v_chars;
  int v_tmax = 6;
  bool v_gaps = false, v_socle = false, v_frob = false, v_multi = false;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "cross-check closed forms against the lattice oracle");
  verify_cmd->add_option("--n", v_n, "range of n, e.g. 2..4");
  verify_cmd->add_option("--d", v_d, "range of d, e.g. 2..5");
  verify_cmd->add_option("--tmax", v_tmax, "layers checked by the gap sweep (default 6)");
  verify_cmd->add_option("--chars", v_chars, "comma-separated primes");
  verify_cmd->add_flag("--gaps", v_gaps, "closed-form vs oracle gap sweep");
  verify_cmd->add_flag("--socle", v_socle, "socle and a-invariant sweep");
  verify_cmd->add_flag("--frobenius", v_frob, "Frobenius trace sweep");
  verify_cmd->add_flag("--multipinch", v_multi, "multipinch bound sweep");
  verify_cmd->add_option("--format", verify_format, "text|json");

  std::vector<std::string> argv_store;
  argv_store.push_back("pinchver");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (analyze_cmd->parsed()) {
      check_format(analyze_format);
      SemigroupSpec spec = spec_from_flags(analyze_flags);
      // Without --char the report covers p = 2 so F-invariants are always shown.
      std::vector<Characteristic> chars;
      for (long long p : parse_list(analyze_chars.empty() ? "2" : analyze_chars)) chars.emplace_back(p);
      AnalysisReport report = analyze(spec, chars);
      if (analyze_format == "json") {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << render_text(report);
      }
      return kSuccess;
    }

    if (gaps_cmd->parsed()) {
      check_format(gaps_format);
      SemigroupSpec spec = spec_from_flags(gaps_flags);
      const Coord bound = gaps_bound < 0 ? 6 * spec.d() : gaps_bound;
      CokernelModel model = cokernel_model(spec);
      GapSummary summary = summarize_gaps(model, bound);
      if (gaps_format == "json") {
        json j{{"schema", kSchemaVersion},
               {"spec", {{"n", spec.n()}, {"d", spec.d()}, {"kind", to_string(spec.kind())}}},
               {"bound", bound},
               {"gap", to_json(summary)},
               {"count", summary.sample.size()}};
        j["spec"]["removed"] = json::array();
        for (const auto& v : spec.removed()) j["spec"]["removed"].push_back(to_json(v));
        out << j.dump(2) << "\n";
      } else {
        out << "spec: " << spec.describe() << "\n";
        out << "family: " << model.gap.describe() << "\n";
        out << "vectors of degree <= " << bound << ": " << summary.sample.size() << "\n";
        for (const auto& v : summary.sample) out << v.to_string() << "\n";
      }
      return kSuccess;
    }

    if (verify_cmd->parsed()) {
      check_format(verify_format);
      if (v_tmax < 1) throw SpecError("--tmax must be >= 1");
      const bool any = v_gaps || v_socle || v_frob || v_multi;
      const bool have_n = !v_n.empty();
      const bool have_d = !v_d.empty();
      auto n_or = [&](std::pair<long long, long long> def, bool applies) {
        return have_n && applies ? parse_range(v_n) : def;
      };
      auto d_or = [&](std::pair<long long, long long> def, bool applies) {
        return have_d && applies ? parse_range(v_d) : def;
      };
      if (have_n && parse_range(v_n).first < 2) throw SpecError("n range must start at >= 2");
      if (have_d && parse_range(v_d).first < 2) throw SpecError("d range must start at >= 2");
      std::vector<long long> chars = v_chars.empty() ? std::vector<long long>{2, 3, 5} : parse_list(v_chars);
      for (long long p : chars) Characteristic{p};

      // Without a selector every sweep runs; --n/--d then steer the gap sweep
      // and the others keep their default ranges.
      std::vector<SweepRow> rows;
      auto append = [&](std::vector<SweepRow> more) { rows.insert(rows.end(), more.begin(), more.end()); };
      if (!any || v_gaps) append(sweep_gap_equivalence(n_or({2, 4}, true), d_or({2, 5}, true), v_tmax));
      if (!any || v_socle) append(sweep_socle(d_or({3, 8}, any)));
      if (!any || v_frob) append(sweep_frobenius(n_or({2, 3}, any), d_or({2, 4}, any), chars));
      if (!any || v_multi) append(sweep_multipinch(n_or({2, 3}, any), d_or({3, 4}, any), chars));

      std::map<std::string, std::pair<int, int>> tally;
      std::vector<std::string> order;
      bool all_ok = true;
      for (const auto& r : rows) {
        if (!tally.count(r.sweep)) order.push_back(r.sweep);
        auto& t = tally[r.sweep];
        t.second++;
        if (r.passed) t.first++;
        all_ok = all_ok && r.passed;
      }
      if (verify_format == "json") {
        json summary = json::object();
        for (const auto& [name, t] : tally) summary[name] = {{"passed", t.first}, {"total", t.second}};
        out << json{{"schema", kSchemaVersion}, {"rows", rows_to_json(rows)}, {"summary", summary},
                    {"all_passed", all_ok}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& r : rows) {
          out << (r.passed ? "PASS " : "FAIL ") << r.sweep << " " << r.item << ": " << r.detail << "\n";
        }
        for (const auto& name : order) {
          out << name << ": " << tally[name].first << "/" << tally[name].second << " pass\n";
        }
        out << (all_ok ? "all pass" : "FAILURES") << "\n";
      }
      return all_ok ? kSuccess : kVerificationFailed;
    }
  } catch (const ResourceError& e) {
    err << "resource failure: " << e.what() << "\n";
    return kResourceFailure;
  } catch (const SpecError& e) {
    err << "invalid spec: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace pinch::cli
