#pragma once

// The `tourn` command line. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit codes:
//   0   success / free / verified
//   1   internal error (a bug)
//   2   usage or parse error
//   10  C5 witness found
//   11  structure finder failed
//   12  structure does not verify
//   13  certificate rejected
//   14  digraph not outsimplicial

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "tourn/io.hpp"
#include "tourn/tourn.hpp"

namespace tourn::cli {

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kWitness = 10,
  kNoStructure = 11,
  kBadStructure = 12,
  kRejected = 13,
  kNotOutsimplicial = 14,
};

namespace detail {

using io::json;

// Splits "a,b,c" and expands "lo-hi" / "lo..hi" ranges.
inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dots = item.find("..");
    auto dash = item.find('-', 1);
    try {
      if (dots != std::string::npos || dash != std::string::npos) {
        const auto cut = dots != std::string::npos ? dots : dash;
        const auto skip = dots != std::string::npos ? 2 : 1;
        const std::int64_t lo = std::stoll(item.substr(0, cut));
        const std::int64_t hi = std::stoll(item.substr(cut + skip));
        if (hi < lo) throw InvalidArgument("empty range '" + item + "'");
        for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw InvalidArgument("bad integer '" + item + "'");
      }
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad integer list '" + s + "'");
    }
  }
  if (out.empty()) throw InvalidArgument("empty integer list");
  return out;
}

inline void emit(const std::string& path, const json& doc, std::ostream& out) {
  if (path.empty() || path == "-")
    out << io::dump(doc);
  else
    io::write_file(path, io::dump(doc));
}

inline bool digest_matches(const json& doc, const std::string& digest) {
  return !doc.contains("input_digest") || doc.at("input_digest") == digest;
}

inline std::string describe(const PairOrWitness& r) {
  std::ostringstream os;
  if (const auto* p = std::get_if<CompletePair>(&r)) {
    os << "complete_pair " << to_string(p->branch) << " |A|=" << p->a.size() << " |B|=" << p->b.size();
  } else {
    os << "c5_witness";
    for (Vertex v : std::get<C5Witness>(r).v) os << ' ' << v;
  }
  return os.str();
}

// Verifies any certificate document against the input it claims to describe.
// Returns the exit code and writes one human-readable line to `out`.
inline int verify_document(const std::string& input_path, const json& doc, std::ostream& out,
                           std::optional<StructureMode> mode = std::nullopt) {
  const std::string type = doc.value("type", "");
  if (type == "split") {
    const auto d = io::load_digraph(input_path);
    if (!digest_matches(doc, io::digest(d))) {
      out << "fail: input digest mismatch\n";
      return kRejected;
    }
    const bool ok = verify_split(d, io::split_from_json(doc));
    out << (ok ? "pass" : "fail") << ": split certificate\n";
    return ok ? kOk : kRejected;
  }
  const auto t = io::load_tournament(input_path);
  if (!digest_matches(doc, io::digest(t))) {
    out << "fail: input digest mismatch\n";
    return kRejected;
  }
  if (type == "complete_pair") {
    const auto p = io::pair_from_json(doc);
    const bool ok = oracle::verify_complete_pair(t, p.a, p.b);
    out << (ok ? "pass" : "fail") << ": complete pair |A|=" << p.a.size() << " |B|=" << p.b.size() << "\n";
    return ok ? kOk : kRejected;
  }
  if (type == "c5_witness") {
    const bool ok = oracle::verify_c5_witness(t, io::witness_from_json(doc));
    out << (ok ? "pass" : "fail") << ": c5 witness\n";
    return ok ? kOk : kRejected;
  }
  if (type == "structure") {
    SmoothStructure s = io::structure_from_json(doc);
    StructureReport r;
    try {
      r = verify_structure(t, s, mode.value_or(StructureMode::kSmooth));
    } catch (const InvalidArgument& e) {
      out << "fail: " << e.what() << "\n";
      return kBadStructure;
    }
    out << (r.pass ? "pass" : "fail") << (r.pass ? "" : ": " + r.message) << "\n";
    return r.pass ? kOk : kBadStructure;
  }
  throw io::FormatError("unknown document type '" + type + "'");
}

struct Row {
  std::string kind;
  int n;
  std::int64_t seed;
  std::string c, lambda, outcome;
  std::size_t size_a = 0, size_b = 0;
  std::size_t tr_lower = 0;
  std::int64_t runtime_ms = -1;
};

inline Row run_cell(const std::string& kind, int n, std::int64_t seed, const Ratio& c, const Ratio& lambda,
                    const Ratio& noise, int attempts, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Row row{kind, n, seed, c.str(), lambda.str(), "", 0, 0, 0, -1};
  const auto useed = static_cast<std::uint64_t>(seed);
  Tournament t;
  std::optional<SmoothStructure> s;
  if (kind == "planted") {
    auto inst = gen_planted_blocks(n, 5, c, noise, useed);
    t = std::move(inst.tournament);
    s = std::move(inst.structure);
    row.lambda = s->spec.lambda.str();
  } else {
    t = kind == "c5free" ? gen_c5free(n, useed) : random_tournament(n, useed);
    s = find_structure(t, StructureSpec{c, lambda, std::vector<int>(5, 0)}, attempts, useed);
  }
  row.tr_lower = max_transitive_greedy(t).size();
  if (!s) {
    row.outcome = "no_structure";
  } else {
    const auto r = find_complete_pair(t, *s);
    if (const auto* p = std::get_if<CompletePair>(&r)) {
      if (!oracle::verify_complete_pair(t, p->a, p->b))
        throw InternalInvariantError("experiment: emitted pair fails verification");
      row.outcome = "complete_pair";
      row.size_a = p->a.size();
      row.size_b = p->b.size();
    } else {
      if (!oracle::verify_c5_witness(t, std::get<C5Witness>(r)))
        throw InternalInvariantError("experiment: emitted witness fails verification");
      row.outcome = "c5_witness";
    }
  }
  if (timing)
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
  return row;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tournament certificates: C5 detection, smooth structures, complete pairs, outsimplicial splits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::kToolVersion);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a tournament or digraph file");
  std::string gen_kind, gen_out, gen_structure_out, gen_c = "1/5", gen_noise = "0";
  int gen_n = 0, gen_k = 5;
  std::uint64_t gen_seed = 0;
  bool gen_blowup = false;
  gen->add_option("kind", gen_kind, "random | c5free | planted | outsimp")->required();
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--seed", gen_seed, "Seed")->required();
  gen->add_option("--out", gen_out, "Output file")->required();
  gen->add_option("--k", gen_k, "planted: number of blocks");
  gen->add_option("--c", gen_c, "planted: block size fraction p/q");
  gen->add_option("--noise", gen_noise, "planted: fraction p/q of the backward-edge budget");
  gen->add_option("--structure-out", gen_structure_out, "planted: where to write the planted structure");
  gen->add_flag("--blowup", gen_blowup, "outsimp: substitute strongly connected pieces");

  // check c5
  auto* check = app.add_subcommand("check", "Check a tournament for a forbidden pattern");
  check->require_subcommand(1);
  auto* check_c5 = check->add_subcommand("c5", "Search for an induced C5");
  std::string check_in, check_out;
  bool check_oracle = false;
  check_c5->add_option("input", check_in, "Tournament file")->required();
  check_c5->add_option("--out", check_out, "Write the witness document here");
  check_c5->add_flag("--oracle", check_oracle, "Use brute-force enumeration (n <= 14)");

  // structure find | verify
  auto* structure = app.add_subcommand("structure", "Find or verify smooth structures");
  structure->require_subcommand(1);
  auto* s_find = structure->add_subcommand("find", "Heuristic search (all-zero w)");
  auto* s_verify = structure->add_subcommand("verify", "Verify a structure document");
  std::string s_in, s_doc, s_out, s_c, s_lambda, s_w, s_mode = "smooth";
  std::uint64_t s_seed = 0;
  int s_attempts = 16;
  std::optional<std::int64_t> s_tr;
  s_find->add_option("input", s_in, "Tournament file")->required();
  s_find->add_option("--c", s_c, "c as p/q")->required();
  s_find->add_option("--lambda", s_lambda, "lambda as p/q")->required();
  s_find->add_option("--w", s_w, "w over {0,1}")->required();
  s_find->add_option("--seed", s_seed, "Seed for retries");
  s_find->add_option("--attempts", s_attempts, "Number of attempts");
  s_find->add_option("--out", s_out, "Output document");
  s_verify->add_option("input", s_in, "Tournament file")->required();
  s_verify->add_option("structure", s_doc, "Structure document")->required();
  s_verify->add_option("--mode", s_mode, "smooth | plain")->check(CLI::IsMember({"smooth", "plain"}));
  s_verify->add_option("--c", s_c, "Override c");
  s_verify->add_option("--lambda", s_lambda, "Override lambda");
  s_verify->add_option("--w", s_w, "Override w");
  s_verify->add_option("--tr", s_tr, "tr(T) value or lower bound, needed when w has a 1");

  // pair find | verify
  auto* pair = app.add_subcommand("pair", "Complete pair pipeline");
  pair->require_subcommand(1);
  auto* p_find = pair->add_subcommand("find", "Run the pipeline");
  auto* p_verify = pair->add_subcommand("verify", "Verify a complete_pair or c5_witness document");
  std::string p_in, p_doc, p_out;
  p_find->add_option("input", p_in, "Tournament file")->required();
  p_find->add_option("structure", p_doc, "Structure document")->required();
  p_find->add_option("--out", p_out, "Output document");
  p_verify->add_option("input", p_in, "Tournament file")->required();
  p_verify->add_option("document", p_doc, "Certificate document")->required();

  // split
  auto* split_cmd = app.add_subcommand("split", "Split an outsimplicial digraph");
  std::string sp_in, sp_out;
  split_cmd->add_option("input", sp_in, "Digraph file")->required();
  split_cmd->add_option("--out", sp_out, "Output document");

  // verify (any document)
  auto* verify = app.add_subcommand("verify", "Verify any certificate document");
  std::string v_in, v_doc;
  verify->add_option("input", v_in, "Tournament or digraph file")->required();
  verify->add_option("document", v_doc, "Certificate document")->required();

  // experiment eh-stats
  auto* experiment = app.add_subcommand("experiment", "Run experiment grids");
  experiment->require_subcommand(1);
  auto* eh_stats = experiment->add_subcommand("eh-stats", "Pipeline outcomes and pair sizes over a grid");
  std::string e_kinds = "planted", e_ns, e_seeds, e_out, e_c = "1/5", e_lambda = "1/5", e_noise = "0";
  int e_attempts = 8, e_threads = 1;
  bool e_timing = false;
  eh_stats->add_option("--kinds", e_kinds, "Comma list of planted, c5free, random");
  eh_stats->add_option("--n", e_ns, "Comma list / ranges of n")->required();
  eh_stats->add_option("--seeds", e_seeds, "Comma list / ranges of seeds")->required();
  eh_stats->add_option("--out", e_out, "CSV output")->required();
  eh_stats->add_option("--c", e_c, "c as p/q");
  eh_stats->add_option("--lambda", e_lambda, "lambda for found structures");
  eh_stats->add_option("--noise", e_noise, "planted noise fraction");
  eh_stats->add_option("--attempts", e_attempts, "Structure finder attempts");
  eh_stats->add_option("--threads", e_threads, "Worker threads");
  eh_stats->add_flag("--timing", e_timing, "Fill runtime_ms (makes the CSV non-reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << io::kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    const auto* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << "error: " << e.what() << "\n";
    if (e.get_exit_code() == 0) {
      out << failed->help();
      return kOk;
    }
    return kUsage;
  }

  try {
    if (*gen) {
      GenSpec spec{parse_gen_kind(gen_kind), gen_n, gen_seed, gen_k, Ratio::parse(gen_c), Ratio::parse(gen_noise),
                   gen_blowup};
      spec.validate();
      std::string text, digest;
      switch (spec.kind) {
        case GenKind::kRandom: {
          auto t = random_tournament(spec.n, spec.seed);
          text = io::to_text(t);
          digest = io::digest(t);
          break;
        }
        case GenKind::kC5Free: {
          auto t = gen_c5free(spec.n, spec.seed);
          text = io::to_text(t);
          digest = io::digest(t);
          break;
        }
        case GenKind::kPlantedBlocks: {
          auto inst = gen_planted_blocks(spec.n, spec.k, spec.c, spec.noise, spec.seed);
          text = io::to_text(inst.tournament);
          digest = io::digest(inst.tournament);
          if (!gen_structure_out.empty())
            io::write_file(gen_structure_out, io::dump(io::make_document("structure", inst.structure, digest)));
          break;
        }
        case GenKind::kOutsimplicial: {
          auto d = gen_outsimplicial(spec.n, spec.seed, spec.blowup);
          text = io::to_text(d);
          digest = io::digest(d);
          break;
        }
      }
      io::write_file(gen_out, text);
      out << digest << "\n";
      return kOk;
    }

    if (*check_c5) {
      const auto t = io::load_tournament(check_in);
      std::optional<C5Witness> w;
      if (check_oracle) {
        w = oracle::brute_c5(t);
        if (w) w = tourn::detail::canonical_c5(t, w->v);
      } else {
        w = find_c5(t);
      }
      if (!w) {
        out << "c5-free\n";
        return kOk;
      }
      out << "c5";
      for (Vertex v : w->v) out << ' ' << v;
      out << "\n";
      if (!check_out.empty()) io::write_file(check_out, io::dump(io::make_document("c5_witness", *w, io::digest(t))));
      return kWitness;
    }

    if (*s_find) {
      const auto t = io::load_tournament(s_in);
      StructureSpec spec{Ratio::parse(s_c), Ratio::parse(s_lambda), parse_w(s_w)};
      auto s = find_structure(t, spec, s_attempts, s_seed);
      if (!s) {
        err << "structure find: no smooth structure found in " << s_attempts << " attempts\n";
        return kNoStructure;
      }
      detail::emit(s_out, io::make_document("structure", *s, io::digest(t)), out);
      if (!s_out.empty()) {
        out << "found";
        for (const auto& set : s->sets) out << ' ' << set.size();
        out << "\n";
      }
      return kOk;
    }

    if (*s_verify) {
      auto doc = io::parse_json(io::read_file(s_doc));
      if (doc.value("type", "") != "structure") throw io::FormatError("not a structure document");
      if (!s_c.empty()) doc["c"] = s_c;
      if (!s_lambda.empty()) doc["lambda"] = s_lambda;
      if (!s_w.empty()) doc["w"] = s_w;
      const auto mode = s_mode == "plain" ? StructureMode::kPlain : StructureMode::kSmooth;
      if (s_tr) {
        const auto t = io::load_tournament(s_in);
        if (!detail::digest_matches(doc, io::digest(t))) {
          out << "fail: input digest mismatch\n";
          return kRejected;
        }
        const auto r = verify_structure(t, io::structure_from_json(doc), mode, *s_tr);
        out << (r.pass ? "pass" : "fail") << (r.pass ? "" : ": " + r.message) << "\n";
        return r.pass ? kOk : kBadStructure;
      }
      return detail::verify_document(s_in, doc, out, mode);
    }

    if (*p_find) {
      const auto t = io::load_tournament(p_in);
      const auto doc = io::parse_json(io::read_file(p_doc));
      if (!detail::digest_matches(doc, io::digest(t))) {
        err << "pair find: structure document belongs to a different input\n";
        return kBadStructure;
      }
      const auto s = io::structure_from_json(doc);
      PairOrWitness r;
      try {
        r = find_complete_pair(t, s);
      } catch (const PreconditionError& e) {
        err << "pair find: " << e.what() << "\n";
        return kBadStructure;
      } catch (const InvalidArgument& e) {
        err << "pair find: " << e.what() << "\n";
        return kBadStructure;
      }
      detail::emit(p_out, io::pair_document(r, io::digest(t)), out);
      if (!p_out.empty()) out << detail::describe(r) << "\n";
      return std::holds_alternative<C5Witness>(r) ? kWitness : kOk;
    }

    if (*p_verify) {
      const auto doc = io::parse_json(io::read_file(p_doc));
      const auto type = doc.value("type", "");
      if (type != "complete_pair" && type != "c5_witness")
        throw io::FormatError("pair verify expects a complete_pair or c5_witness document");
      return detail::verify_document(p_in, doc, out);
    }

    if (*split_cmd) {
      const auto d = io::load_digraph(sp_in);
      SplitCertificate cert;
      try {
        cert = split(d);
      } catch (const NotOutsimplicialError& e) {
        const auto& v = e.violation();
        err << "split: not outsimplicial: " << v.v << " -> " << v.a << ", " << v.v << " -> " << v.b << ", " << v.a
            << " and " << v.b << " non-adjacent\n";
        return kNotOutsimplicial;
      }
      detail::emit(sp_out, io::make_document("split", cert, io::digest(d)), out);
      if (!sp_out.empty())
        out << "case " << to_string(cert.kind) << " (" << to_string(cert.branch) << ") |A|=" << cert.a.size()
            << " |B|=" << cert.b.size() << "\n";
      return kOk;
    }

    if (*verify) return detail::verify_document(v_in, io::parse_json(io::read_file(v_doc)), out);

    if (*eh_stats) {
      std::vector<std::string> kinds;
      {
        std::stringstream ss(e_kinds);
        std::string k;
        while (std::getline(ss, k, ','))
          if (!k.empty()) {
            if (k != "planted" && k != "c5free" && k != "random") throw InvalidArgument("unknown kind '" + k + "'");
            kinds.push_back(k);
          }
      }
      const auto ns = detail::parse_int_list(e_ns);
      const auto seeds = detail::parse_int_list(e_seeds);
      const Ratio c = Ratio::parse(e_c), lambda = Ratio::parse(e_lambda), noise = Ratio::parse(e_noise);
      struct Cell {
        std::string kind;
        int n;
        std::int64_t seed;
      };
      std::vector<Cell> cells;
      for (const auto& k : kinds)
        for (auto n : ns)
          for (auto s : seeds) cells.push_back({k, static_cast<int>(n), s});
      std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return std::tie(a.kind, a.n, a.seed) < std::tie(b.kind, b.n, b.seed);
      });
      cells.erase(std::unique(cells.begin(), cells.end(),
                              [](const Cell& a, const Cell& b) {
                                return std::tie(a.kind, a.n, a.seed) == std::tie(b.kind, b.n, b.seed);
                              }),
                  cells.end());
      std::vector<detail::Row> rows(cells.size());
      const int workers = std::max(1, e_threads);
      std::vector<std::future<void>> pool;
      for (int w = 0; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, [&, w] {
          for (std::size_t i = static_cast<std::size_t>(w); i < cells.size(); i += static_cast<std::size_t>(workers))
            rows[i] = detail::run_cell(cells[i].kind, cells[i].n, cells[i].seed, c, lambda, noise, e_attempts, e_timing);
        }));
      for (auto& f : pool) f.get();
      std::ostringstream csv;
      csv << "kind,n,seed,c,lambda,outcome,sizeA,sizeB,tr_lower_bound,runtime_ms\n";
      for (const auto& r : rows) {
        csv << r.kind << ',' << r.n << ',' << r.seed << ',' << r.c << ',' << r.lambda << ',' << r.outcome << ','
            << r.size_a << ',' << r.size_b << ',' << r.tr_lower << ',';
        if (r.runtime_ms >= 0) csv << r.runtime_ms;
        csv << '\n';
      }
      io::write_file(e_out, csv.str());
      out << rows.size() << " rows\n";
      return kOk;
    }
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace tourn::cli
