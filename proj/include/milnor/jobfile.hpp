// Flat key/value job files consumed by the CLI.
//
//   # comment
//   vars  = x, y
//   f     = x^3 + y^3
//   group = 3            (omitted = trivial group, plain mu computations)
//   chars = 1; 2         (one row per variable, k integers per row)
// Optional keys: dmax, seed, count, mu_cap, degree_bound, mode, signs, format.
#ifndef MILNOR_JOBFILE_HPP
#define MILNOR_JOBFILE_HPP

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/group.hpp"
#include "milnor/parse.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

struct JobFile {
  std::vector<std::string> vars;
  std::string f_text;
  std::optional<Polynomial> f;
  ActionSpec action;  // trivial group with trivial characters when group is omitted
  bool has_group = false;
  std::optional<unsigned> dmax;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned long> mu_cap;
  std::optional<unsigned> degree_bound;
  std::optional<unsigned long> count;
  std::optional<std::string> mode;    // "exhaustive" | "randomized"
  std::optional<std::string> format;  // "human" | "json"
  bool signs = false;
  std::vector<std::string> warnings;  // e.g. character entries reduced mod the order
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<std::string> split_list(const std::string& s) {
  // Comma- or whitespace-separated.
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline long long parse_ll(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw JobError("invalid integer '" + s + "' for " + what);
  }
}

inline unsigned long long parse_ull(const std::string& s, const std::string& what) {
  const long long v = parse_ll(s, what);
  if (v < 0) throw JobError(what + " must be non-negative");
  return static_cast<unsigned long long>(v);
}

}  // namespace detail

inline JobFile parse_job_file(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw JobError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw JobError("line " + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second)
      throw JobError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }

  static const char* known[] = {"vars", "f",     "group", "chars", "dmax",   "seed",
                                "count", "mu_cap", "degree_bound", "mode",  "format", "signs"};
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    if (!ok) throw JobError("unknown key '" + k + "'");
  }

  JobFile job;
  auto it = kv.find("vars");
  if (it == kv.end()) throw JobError("missing required key 'vars'");
  job.vars = detail::split_list(it->second);
  if (job.vars.empty()) throw JobError("'vars' lists no variables");
  for (const std::string& v : job.vars)
    if (!detail::valid_identifier(v)) throw JobError("invalid variable name '" + v + "'");
  for (std::size_t i = 0; i < job.vars.size(); ++i)
    for (std::size_t j = i + 1; j < job.vars.size(); ++j)
      if (job.vars[i] == job.vars[j]) throw JobError("duplicate variable '" + job.vars[i] + "'");

  if ((it = kv.find("group")) != kv.end()) {
    std::vector<unsigned long> orders;
    for (const std::string& s : detail::split_list(it->second)) {
      const unsigned long long d = detail::parse_ull(s, "group order");
      if (d == 0) throw JobError("group orders must be positive");
      orders.push_back(static_cast<unsigned long>(d));
    }
    if (orders.empty()) throw JobError("'group' lists no cyclic orders");
    job.action.group = AbelianGroup(std::move(orders));
    job.has_group = true;
  }

  if ((it = kv.find("chars")) != kv.end()) {
    if (!job.has_group) throw JobError("'chars' given without 'group'");
    const std::vector<std::string> rows = detail::split(it->second, ';');
    if (rows.size() != job.vars.size())
      throw JobError("'chars' must have one row per variable (" +
                     std::to_string(job.vars.size()) + " expected, " +
                     std::to_string(rows.size()) + " given)");
    const std::size_t k = job.action.group.rank();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<long long> exps;
      for (const std::string& s : detail::split_list(rows[r]))
        exps.push_back(detail::parse_ll(s, "character exponent"));
      if (exps.size() != k)
        throw JobError("character row " + std::to_string(r + 1) + " must have " +
                       std::to_string(k) + " entries");
      for (std::size_t j = 0; j < k; ++j) {
        const long long d = static_cast<long long>(job.action.group.orders()[j]);
        if (exps[j] < 0 || exps[j] >= d)
          job.warnings.push_back("character entry " + std::to_string(exps[j]) + " for variable '" +
                                 job.vars[r] + "' reduced mod " + std::to_string(d));
      }
      job.action.chars.emplace_back(job.action.group, exps);
    }
  } else if (job.has_group) {
    throw JobError("'group' given without 'chars'");
  } else {
    job.action.group = AbelianGroup();
    for (std::size_t i = 0; i < job.vars.size(); ++i)
      job.action.chars.push_back(Character::trivial(job.action.group));
  }

  if ((it = kv.find("f")) != kv.end()) {
    job.f_text = it->second;
    job.f = parse_polynomial(job.f_text, job.vars);
  }

  if ((it = kv.find("dmax")) != kv.end())
    job.dmax = static_cast<unsigned>(detail::parse_ull(it->second, "dmax"));
  if ((it = kv.find("seed")) != kv.end())
    job.seed = static_cast<std::uint64_t>(detail::parse_ull(it->second, "seed"));
  if ((it = kv.find("count")) != kv.end())
    job.count = static_cast<unsigned long>(detail::parse_ull(it->second, "count"));
  if ((it = kv.find("mu_cap")) != kv.end())
    job.mu_cap = static_cast<unsigned long>(detail::parse_ull(it->second, "mu_cap"));
  if ((it = kv.find("degree_bound")) != kv.end())
    job.degree_bound = static_cast<unsigned>(detail::parse_ull(it->second, "degree_bound"));
  if ((it = kv.find("mode")) != kv.end()) {
    if (it->second != "exhaustive" && it->second != "randomized")
      throw JobError("mode must be 'exhaustive' or 'randomized'");
    job.mode = it->second;
  }
  if ((it = kv.find("format")) != kv.end()) {
    if (it->second != "human" && it->second != "json")
      throw JobError("format must be 'human' or 'json'");
    job.format = it->second;
  }
  if ((it = kv.find("signs")) != kv.end()) {
    if (it->second == "true" || it->second == "1") job.signs = true;
    else if (it->second == "false" || it->second == "0") job.signs = false;
    else throw JobError("signs must be true or false");
  }
  return job;
}

inline JobFile load_job_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JobError("cannot open job file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job_file(buf.str());
}

}  // namespace milnor

#endif
