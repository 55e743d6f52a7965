#pragma once

// Text formats for tournaments and digraphs, JSON certificate documents and
// input digests.
//
//   # optional comment lines
//   tournament 1          (or "digraph 1")
//   <n>
//   <n rows of n characters '0'/'1'; row i column j = 1 means i -> j>
//
// The digest of an input is the SHA-256 of its canonical text (no comments),
// so re-commenting a file does not detach its certificates.

#include <openssl/evp.h>

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tourn/ehpair.hpp"
#include "tourn/graph.hpp"
#include "tourn/outsimplicial.hpp"
#include "tourn/patterns.hpp"
#include "tourn/structures.hpp"

namespace tourn::io {

inline constexpr const char* kToolVersion = "tourn 0.1.0";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::uint8_t> read_matrix(std::istream& in, const std::string& header, int& n) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](bool allow_comment) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (allow_comment && !line.empty() && line[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(true)) throw FormatError("empty input, expected '" + header + "'");
  if (line != header) throw FormatError("line " + std::to_string(lineno) + ": expected '" + header + "', got '" + line + "'");
  if (!next_line(false)) throw FormatError("missing vertex count");
  try {
    std::size_t used = 0;
    n = std::stoi(line, &used);
    if (used != line.size() || n < 0) throw FormatError("");
  } catch (const std::exception&) {
    throw FormatError("line " + std::to_string(lineno) + ": bad vertex count '" + line + "'");
  }
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (!next_line(false)) throw FormatError("expected " + std::to_string(n) + " matrix rows, got " + std::to_string(i));
    if (static_cast<int>(line.size()) != n)
      throw FormatError("line " + std::to_string(lineno) + ": row has " + std::to_string(line.size()) +
                        " characters, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (line[j] != '0' && line[j] != '1')
        throw FormatError("line " + std::to_string(lineno) + ": unexpected character '" + line.substr(j, 1) + "'");
      m[static_cast<std::size_t>(i) * n + j] = line[j] == '1';
    }
  }
  while (next_line(false))
    if (!line.empty()) throw FormatError("line " + std::to_string(lineno) + ": trailing content");
  return m;
}

inline std::string write_matrix(const std::string& header, int n, const std::vector<std::uint8_t>& m) {
  std::string s = header + "\n" + std::to_string(n) + "\n";
  s.reserve(s.size() + static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.push_back(m[static_cast<std::size_t>(i) * n + j] ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

}  // namespace detail

inline std::string to_text(const Tournament& t) { return detail::write_matrix("tournament 1", t.size(), t.matrix()); }
inline std::string to_text(const OrientedDigraph& d) { return detail::write_matrix("digraph 1", d.size(), d.matrix()); }

inline Tournament read_tournament(std::istream& in) {
  int n = 0;
  auto m = detail::read_matrix(in, "tournament 1", n);
  try {
    return Tournament::from_matrix(n, m);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

inline OrientedDigraph read_digraph(std::istream& in) {
  int n = 0;
  auto m = detail::read_matrix(in, "digraph 1", n);
  try {
    return OrientedDigraph::from_matrix(n, m);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw FormatError("cannot write '" + path + "'");
  f << content;
}

inline Tournament load_tournament(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_tournament(in);
}
inline OrientedDigraph load_digraph(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_digraph(in);
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 15]);
  }
  return out;
}

template <class Graph>
std::string digest(const Graph& g) {
  return "sha256:" + sha256_hex(to_text(g));
}

// ---- certificate documents ----

using nlohmann::json;

inline json document(const std::string& type, const std::string& input_digest) {
  return json{{"type", type}, {"tool", kToolVersion}, {"input_digest", input_digest}};
}

inline json to_json(const CompletePair& p) {
  return json{{"A", p.a}, {"B", p.b}, {"branch", to_string(p.branch)}};
}
inline json to_json(const C5Witness& w) { return json{{"vertices", w.v}}; }
inline json to_json(const SplitCertificate& c) {
  return json{{"case", to_string(c.kind)}, {"A", c.a}, {"B", c.b}, {"branch", to_string(c.branch)}, {"pivot", c.pivot}};
}
inline json to_json(const SmoothStructure& s) {
  return json{{"c", s.spec.c.str()}, {"lambda", s.spec.lambda.str()}, {"w", format_w(s.spec.w)}, {"sets", s.sets}};
}

inline json pair_document(const PairOrWitness& r, const std::string& input_digest) {
  if (const auto* p = std::get_if<CompletePair>(&r)) {
    json doc = document("complete_pair", input_digest);
    doc.update(to_json(*p));
    return doc;
  }
  json doc = document("c5_witness", input_digest);
  doc.update(to_json(std::get<C5Witness>(r)));
  return doc;
}

template <class T>
json make_document(const char* type, const T& value, const std::string& input_digest) {
  json doc = document(type, input_digest);
  doc.update(to_json(value));
  return doc;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto json_field(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad ") + what + " document: " + e.what());
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("bad ") + what + " document: " + e.what());
  }
}

inline CompletePair pair_from_json(const json& j) {
  return json_field("complete_pair", [&] {
    auto branch = parse_pair_branch(j.at("branch").get<std::string>());
    if (!branch) throw FormatError("unknown branch '" + j.at("branch").get<std::string>() + "'");
    return CompletePair{j.at("A").get<VertexList>(), j.at("B").get<VertexList>(), *branch};
  });
}

inline C5Witness witness_from_json(const json& j) {
  return json_field("c5_witness", [&] { return C5Witness{j.at("vertices").get<std::array<Vertex, 5>>()}; });
}

inline SplitCertificate split_from_json(const json& j) {
  return json_field("split", [&] {
    SplitCertificate c;
    const auto kind = j.at("case").get<std::string>();
    if (kind != "I" && kind != "II") throw FormatError("split case must be I or II");
    c.kind = kind == "I" ? SplitCase::kNoEdges : SplitCase::kAllPaths;
    const auto branch = j.at("branch").get<std::string>();
    if (branch != "big-clique" && branch != "centroid") throw FormatError("unknown split branch '" + branch + "'");
    c.branch = branch == "big-clique" ? SplitBranch::kBigClique : SplitBranch::kCentroid;
    c.a = j.at("A").get<VertexList>();
    c.b = j.at("B").get<VertexList>();
    c.pivot = j.value("pivot", VertexList{});
    return c;
  });
}

inline SmoothStructure structure_from_json(const json& j) {
  return json_field("structure", [&] {
    SmoothStructure s;
    s.spec.c = Ratio::parse(j.at("c").get<std::string>());
    s.spec.lambda = Ratio::parse(j.at("lambda").get<std::string>());
    s.spec.w = parse_w(j.at("w").get<std::string>());
    s.sets = j.at("sets").get<std::vector<VertexList>>();
    return s;
  });
}

/// Pretty-printed with a trailing newline; key order is fixed by nlohmann's
/// sorted object map, so equal documents serialize to equal bytes.
inline std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace tourn::io
