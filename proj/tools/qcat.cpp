#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "qcat/qcat.hpp"

namespace {

using namespace qcat;
using io::json;

enum Exit { ok = 0, usage = 1, invalid = 2, law_failure = 3, budget = 4 };

bool g_json = false;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

template <Quantaloid Q>
SubsetWeight<Q> subset_of(const CategoryPtr<Q>& A, const std::string& list) {
  std::vector<std::size_t> members;
  for (const auto& n : split_list(list)) members.push_back(A->index(n));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  QObject type = 0;
  for (auto a : members)
    if (A->type(a) != A->type(members.front())) throw TypeMismatch("subset mixes object types");
  if (!members.empty()) type = A->type(members.front());
  return make_subset(A, type, members);
}

int print_report(const Report& r, const std::string& what) {
  if (g_json) {
    auto j = io::emit_report(r);
    j["kind"] = what;
    print_json(j);
  } else if (r.ok()) {
    std::cout << what << ": ok\n";
  } else {
    std::cout << what << ": " << r.violations.size() << " violation(s)\n";
    for (const auto& v : r.violations) std::cout << "  " << v << "\n";
  }
  return r.ok() ? ok : invalid;
}

int cmd_validate(const std::string& file) {
  const auto j = io::read_json_file(file);
  if (j.is_object() && j.contains("matrix")) {
    return std::visit(
        [](const auto& d) {
          auto r = validate_category(*d.dom());
          r.append(validate_category(*d.cod()));
          r.append(validate_distributor(d));
          return print_report(r, "distributor");
        },
        io::parse_any_distributor(j));
  }
  if (j.is_object() && j.contains("homs")) {
    return print_report(validate_quantaloid(io::parse_table_quantaloid(j)), "quantaloid");
  }
  return std::visit([](const auto& A) { return print_report(validate_category(*A), "category"); },
                    io::parse_any_category(j));
}

int cmd_hausdorff(const std::string& file, const std::string& source, const std::string& target) {
  const auto A = io::parse_metric_space(io::read_json_file(file));
  const auto s = subset_of(A, source), t = subset_of(A, target);
  const auto st = directed_hausdorff(s, t), ts = directed_hausdorff(t, s), sym = symmetric_hausdorff(s, t);
  if (g_json) {
    print_json(json{{"source", split_list(source)},
                    {"target", split_list(target)},
                    {"source_to_target", st.str()},
                    {"target_to_source", ts.str()},
                    {"symmetric", sym.str()}});
  } else {
    std::cout << "source->target  " << st.str() << "\n"
              << "target->source  " << ts.str() << "\n"
              << "symmetric       " << sym.str() << "\n";
  }
  return ok;
}

template <Quantaloid Q>
json emit_completion(const Completion<Q>& c, const std::vector<std::vector<std::size_t>>* gens = nullptr) {
  auto out = io::emit_presheaf_category(*c.objects, gens);
  out["unit"] = io::emit_functor(c.unit);
  return out;
}

void write_or_print(const json& j, const std::string& out) {
  if (out.empty())
    print_json(j);
  else
    io::write_json_file(out, j);
}

int cmd_hcat(const std::string& file, const std::string& out) {
  const auto j = io::read_json_file(file);
  std::visit(
      [&](const auto& A) {
        const auto H = hausdorff_category(A);
        write_or_print(emit_completion(H.completion, &H.generators), out);
      },
      io::parse_any_category(j));
  return ok;
}

int cmd_complete(const std::string& doctrine, const std::string& file, std::size_t materialization,
                 const std::string& out) {
  const auto j = io::read_json_file(file);
  std::visit(
      [&](const auto& A) {
        using Q = typename std::decay_t<decltype(*A)>::quantaloid_type;
        if (doctrine == "hausdorff") {
          const auto H = hausdorff_category(A);
          write_or_print(emit_completion(H.completion, &H.generators), out);
        } else if (doctrine == "cauchy") {
          if constexpr (EnumerableQuantaloid<Q>)
            write_or_print(emit_completion(cauchy_completion(A)), out);
          else
            throw NotEnumerable("Cauchy presheaves on a Lawvere space are not enumerable");
        } else if (doctrine == "identity") {
          write_or_print(emit_completion(build_subcategory(A, weight_class_representable<Q>())), out);
        } else {
          if constexpr (EnumerableQuantaloid<Q>) {
            auto pa = presheaf_category(A, materialization);
            write_or_print(emit_completion(Completion<Q>{pa, free_unit(*pa)}), out);
          } else {
            throw NotEnumerable("the free cocompletion of a Lawvere space is infinite");
          }
        }
      },
      io::parse_any_category(j));
  return ok;
}

int cmd_extend(const std::string& file, const std::string& out) {
  const auto j = io::read_json_file(file);
  std::visit(
      [&](const auto& Phi) {
        const auto ha = hausdorff_category(Phi.dom()), hb = hausdorff_category(Phi.cod());
        write_or_print(io::emit_distributor(hausdorff_on_dist(Phi, ha, hb)), out);
      },
      io::parse_any_distributor(j));
  return ok;
}

int cmd_laws(const std::string& suite, std::size_t n, std::uint64_t seed, std::size_t materialization) {
  laws::Options o;
  o.budget = n;
  o.seed = seed;
  o.materialization = materialization;
  const auto r = laws::run_suite(suite, o);
  if (g_json) {
    print_json(io::emit_law_report(r));
  } else {
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& e : r.entries) {
      const char* tag = e.status == LawStatus::pass ? "PASS" : e.status == LawStatus::fail ? "FAIL" : "SKIP";
      (e.status == LawStatus::pass ? pass : e.status == LawStatus::fail ? fail : skipped)++;
      std::cout << tag << "  " << e.law << "  [" << e.fixture << "]";
      if (!e.counterexample.empty()) std::cout << "  " << e.counterexample;
      std::cout << "\n";
    }
    std::cout << r.suite << ": " << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  }
  return r.ok() ? ok : law_failure;
}

int cmd_enumerate(const std::string& what, const std::string& file, std::size_t n) {
  if (what != "presheaves") throw Error("unknown enumeration '" + what + "'");
  const auto j = io::read_json_file(file);
  std::visit(
      [&](const auto& A) {
        using Q = typename std::decay_t<decltype(*A)>::quantaloid_type;
        if constexpr (EnumerableQuantaloid<Q>) {
          const auto ps = enumerate_presheaves(A, n);
          if (g_json) {
            json arr = json::array();
            for (const auto& p : ps) arr.push_back(io::emit_presheaf(p));
            print_json(json{{"count", ps.size()}, {"presheaves", arr}});
          } else {
            for (const auto& p : ps) std::cout << presheaf_label(p) << "\n";
            std::cout << ps.size() << " presheaves\n";
          }
        } else {
          throw NotEnumerable("presheaves on a Lawvere space are not enumerable");
        }
      },
      io::parse_any_category(j));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcat: quantaloid-enriched categories, cocompletions and Hausdorff distances"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");
  std::size_t materialization = default_budget;
  app.add_option("--materialization", materialization, "cap on enumerated presheaves")->capture_default_str();

  std::string file, source, target, out, doctrine = "hausdorff", suite = "all", what = "presheaves";
  std::size_t n = 200;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "check the axioms of a category, distributor or quantaloid file");
  validate->add_option("file", file)->required();

  auto* haus = app.add_subcommand("hausdorff", "directed and symmetric Hausdorff distances in a metric space");
  haus->add_option("--space", file)->required();
  haus->add_option("--source", source)->required();
  haus->add_option("--target", target)->required();

  auto* hcat = app.add_subcommand("hcat", "emit H(A) with generator sets");
  hcat->add_option("--space", file)->required();
  hcat->add_option("--out", out);

  auto* complete = app.add_subcommand("complete", "emit a completion and its unit");
  complete->add_option("--doctrine", doctrine)->check(CLI::IsMember({"hausdorff", "cauchy", "free", "identity"}));
  complete->add_option("--input", file)->required();
  complete->add_option("--out", out);

  auto* extend = app.add_subcommand("extend", "emit the extension of a distributor");
  extend->add_option("--dist", file)->required();
  extend->add_option("--doctrine", doctrine)->check(CLI::IsMember({"hausdorff"}));
  extend->add_option("--out", out);

  auto* lawcmd = app.add_subcommand("laws", "run a law suite");
  lawcmd->add_option("--suite", suite)->check(
      CLI::IsMember({"lattice", "quantaloid", "dist", "presheaf", "doctrine", "hausdorff", "all"}));
  lawcmd->add_option("--budget", n, "random instances per law family")->capture_default_str();
  lawcmd->add_option("--seed", seed)->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "list presheaves on a finite category");
  enumerate->add_option("--what", what)->check(CLI::IsMember({"presheaves"}));
  enumerate->add_option("--input", file)->required();
  std::size_t enum_budget = default_budget;
  enumerate->add_option("--budget", enum_budget, "cap on the number of presheaves")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*haus) return cmd_hausdorff(file, source, target);
    if (*hcat) return cmd_hcat(file, out);
    if (*complete) return cmd_complete(doctrine, file, materialization, out);
    if (*extend) return cmd_extend(file, out);
    if (*lawcmd) return cmd_laws(suite, n, seed, materialization);
    if (*enumerate) return cmd_enumerate(what, file, enum_budget);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return budget;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
