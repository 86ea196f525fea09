#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "biphole/families.hpp"
#include "biphole/graph6.hpp"
#include "biphole/invariants.hpp"
#include "biphole/json_report.hpp"
#include "biphole/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("BIPHOLE_THREADS")) {
    int v = 0;
    std::size_t used = 0;
    try {
      v = std::stoi(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != std::string(env).size() || v < 1)
      throw std::invalid_argument("BIPHOLE_THREADS must be a positive integer, got \"" +
                                  std::string(env) + "\"");
    return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string join_args(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return in;
}

std::vector<biphole::TheoremId> parse_check_ids(const std::vector<std::string>& args) {
  std::vector<biphole::TheoremId> ids;
  auto push = [&](biphole::TheoremId id) {
    for (biphole::TheoremId seen : ids)
      if (seen == id) return;
    ids.push_back(id);
  };
  for (const std::string& a : args) {
    std::string low = a;
    for (char& c : low) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "all") {
      for (biphole::TheoremId id : biphole::kAllTheorems) push(id);
      continue;
    }
    auto id = biphole::theorem_from_string(a);
    if (!id)
      throw std::invalid_argument("unknown check \"" + a +
                                  "\" (use T1.1..T1.6, L1.7, C1.10, P4.1, LOG2 or all)");
    push(*id);
  }
  return ids;
}

void print_csv(std::ostream& out,
               const std::vector<std::pair<std::string, biphole::InvariantReport>>& entries,
               bool with_oracles) {
  out << "graph,n,m,delta,sigma2,alpha,tialpha,kappa,is_connected,is_2_connected,"
         "has_triangle,is_bipartite,is_balanced_complete_bipartite,is_hamiltonian,"
         "is_pancyclic";
  if (with_oracles) out << ",tialpha_definitional,kappa_oracle,routes_agree";
  out << "\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& [name, r] : entries) {
    out << name << ',' << r.n << ',' << r.m << ',' << r.delta << ','
        << (r.sigma2 ? std::to_string(*r.sigma2) : "infinity") << ',' << r.alpha << ','
        << r.tialpha << ',' << r.kappa << ',' << b(r.is_connected) << ','
        << b(r.is_2_connected) << ',' << b(r.has_triangle) << ',' << b(r.is_bipartite) << ','
        << b(r.is_balanced_complete_bipartite) << ',' << b(r.is_hamiltonian) << ','
        << b(r.is_pancyclic);
    if (with_oracles)
      out << ',' << *r.tialpha_definitional << ',' << *r.kappa_oracle << ','
          << b(*r.routes_agree);
    out << "\n";
  }
}

struct CheckSourceOptions {
  int enumerate_order = 0;
  std::string g6_file;
};

std::unique_ptr<biphole::GraphSource> make_source(const CheckSourceOptions& opt,
                                                  std::string& desc) {
  if ((opt.enumerate_order > 0) == !opt.g6_file.empty())
    throw std::invalid_argument("choose exactly one of --enumerate and --g6-file");
  if (opt.enumerate_order > 0) {
    desc = "labeled-graphs:n=" + std::to_string(opt.enumerate_order);
    return std::make_unique<biphole::LabeledGraphs>(opt.enumerate_order);
  }
  desc = "g6-file:" + opt.g6_file;
  auto in = open_or_throw(opt.g6_file);
  return std::make_unique<biphole::Graph6Lines>(biphole::Graph6Lines::from_stream(in));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite-hole-number invariants, generators and theorem checks"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);

  // invariants
  auto* inv = app.add_subcommand("invariants", "compute the invariant report for graphs");
  std::string inv_g6, inv_g6_file, inv_edgelist;
  std::vector<std::string> inv_family;
  bool inv_oracle = false, inv_csv = false;
  inv->add_option("--g6", inv_g6, "one graph6 string");
  inv->add_option("--g6-file", inv_g6_file, "file with one graph6 line per graph");
  inv->add_option("--edgelist", inv_edgelist, "file with \"n m\" then m edge lines");
  inv->add_option("--family", inv_family, "family spec, e.g. K_bip 3 4")->expected(-1);
  inv->add_flag("--oracle", inv_oracle, "also compute second-route values and agreement");
  inv->add_flag("--csv", inv_csv, "emit CSV instead of JSON");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family instance");
  std::vector<std::string> gen_spec;
  std::string gen_format = "g6", gen_out;
  gen->add_option("spec", gen_spec, "family spec, e.g. ex52 4 8 7")->required()->expected(-1);
  gen->add_option("--format", gen_format, "g6 or edgelist")
      ->check(CLI::IsMember({"g6", "edgelist"}));
  gen->add_option("--out", gen_out, "write to this file instead of stdout");

  // check
  auto* chk = app.add_subcommand("check", "verify claims over a graph source");
  std::vector<std::string> chk_ids;
  CheckSourceOptions chk_src;
  int chk_threads = 0;
  chk->add_option("claims", chk_ids, "claim ids (T1.1..LOG2) or all")->required()->expected(-1);
  chk->add_option("--enumerate", chk_src.enumerate_order,
                  "scan every labeled graph of this order (1..7)");
  chk->add_option("--g6-file", chk_src.g6_file, "scan graphs from this graph6 file");
  chk->add_option("--threads", chk_threads, "worker threads (default: BIPHOLE_THREADS or cores)");

  // search-q54
  auto* srch = app.add_subcommand("search-q54",
                                  "find 2-connected graphs with sigma2 >= 2 tialpha - 1 "
                                  "and kappa < alpha");
  CheckSourceOptions srch_src;
  int srch_threads = 0;
  srch->add_option("--enumerate", srch_src.enumerate_order,
                   "scan every labeled graph of this order (1..7)");
  srch->add_option("--g6-file", srch_src.g6_file, "scan graphs from this graph6 file");
  srch->add_option("--threads", srch_threads,
                   "worker threads (default: BIPHOLE_THREADS or cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (inv->parsed()) {
      int sources = (!inv_g6.empty()) + (!inv_g6_file.empty()) + (!inv_edgelist.empty()) +
                    (!inv_family.empty());
      if (sources != 1)
        throw std::invalid_argument(
            "choose exactly one of --g6, --g6-file, --edgelist, --family");
      std::vector<std::pair<std::string, biphole::InvariantReport>> entries;
      if (!inv_g6.empty()) {
        entries.emplace_back(inv_g6,
                             compute_invariants(biphole::parse_graph6(inv_g6), inv_oracle));
      } else if (!inv_g6_file.empty()) {
        auto in = open_or_throw(inv_g6_file);
        auto src = biphole::Graph6Lines::from_stream(in);
        for (std::uint64_t i = 0; i < src.size(); ++i)
          entries.emplace_back(src.label(i), compute_invariants(src.get(i), inv_oracle));
      } else if (!inv_edgelist.empty()) {
        auto in = open_or_throw(inv_edgelist);
        entries.emplace_back(inv_edgelist,
                             compute_invariants(biphole::parse_edge_list(in), inv_oracle));
      } else {
        biphole::FamilyInstance inst = biphole::build_family(join_args(inv_family));
        entries.emplace_back(inst.name, compute_invariants(inst.graph, inv_oracle));
      }
      if (inv_csv)
        print_csv(std::cout, entries, inv_oracle);
      else
        std::cout << biphole::invariants_report(entries).dump(2) << "\n";
      return kExitOk;
    }

    if (gen->parsed()) {
      biphole::FamilyInstance inst = biphole::build_family(join_args(gen_spec));
      std::string payload = gen_format == "g6" ? biphole::write_graph6(inst.graph) + "\n"
                                               : biphole::write_edge_list(inst.graph);
      if (gen_out.empty()) {
        std::cout << payload;
      } else {
        std::ofstream out(gen_out);
        if (!out) throw std::invalid_argument("cannot open " + gen_out);
        out << payload;
      }
      return kExitOk;
    }

    if (chk->parsed()) {
      std::vector<biphole::TheoremId> ids = parse_check_ids(chk_ids);
      std::string desc;
      auto source = make_source(chk_src, desc);
      biphole::SearchResult res =
          biphole::run_suite(*source, ids, resolve_threads(chk_threads));
      std::cout << biphole::suite_report(res, ids, desc).dump(2) << "\n";
      std::cerr << "# scanned " << res.scanned << " graphs in " << res.elapsed.count()
                << " ms\n";
      return res.violations.empty() ? kExitOk : kExitViolation;
    }

    if (srch->parsed()) {
      std::string desc;
      auto source = make_source(srch_src, desc);
      biphole::SearchResult res =
          biphole::search_kappa_alpha(*source, resolve_threads(srch_threads));
      std::cout << biphole::search_report(res, desc).dump(2) << "\n";
      std::cerr << "# scanned " << res.scanned << " graphs in " << res.elapsed.count()
                << " ms\n";
      return res.violations.empty() ? kExitOk : kExitInternal;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const biphole::Graph6Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
