#include "canform/form_io.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace canform {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

// data lines only; '#' starts a comment, blank lines skipped
std::vector<std::vector<Token>> tokenize(std::istream& in) {
  std::vector<std::vector<Token>> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != '#')
        ++j;
      toks.push_back({raw.substr(i, j - i), lineno, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

bool valid_integer(const std::string& s) {
  size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat parse_rational(const Token& t) {
  const std::string& s = t.text;
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer(s)) throw ParseError("invalid integer '" + s + "'", t.line, t.col);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw ParseError("invalid rational '" + s + "'", t.line, t.col);
  Int d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'", t.line, t.col);
  return make_rat(Int(num), d);
}

}  // namespace

RatMat parse_rat_matrix(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const Token& head = lines[0][0];
  if (lines[0].size() != 1 || !valid_integer(head.text))
    throw ParseError("expected the dimension on the first data line", head.line, head.col);
  long n = std::strtol(head.text.c_str(), nullptr, 10);
  if (n <= 0 || n > 10000) throw ParseError("dimension out of range", head.line, head.col);
  if (static_cast<long>(lines.size()) != n + 1) {
    int l = lines.size() > 1 ? lines.back()[0].line : head.line;
    throw ParseError("expected exactly " + std::to_string(n) + " matrix rows", l, 1);
  }
  RatMat m(static_cast<int>(n), static_cast<int>(n));
  for (long i = 0; i < n; ++i) {
    const auto& row = lines[i + 1];
    if (static_cast<long>(row.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " entries in row", row[0].line,
                       row[0].col);
    for (long j = 0; j < n; ++j) m(static_cast<int>(i), static_cast<int>(j)) = parse_rational(row[j]);
  }
  return m;
}

Form parse_form_text(const std::string& text) {
  std::istringstream in(text);
  return Form(parse_rat_matrix(in));
}

Form parse_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  try {
    RatMat m = parse_rat_matrix(in);
    return Form(std::move(m));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.raw, e.line, e.col);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string write_form_text(const RatMat& gram) {
  std::string s = std::to_string(gram.rows);
  s += '\n';
  for (int i = 0; i < gram.rows; ++i) {
    for (int j = 0; j < gram.cols; ++j) {
      if (j) s += ' ';
      s += gram(i, j).get_str();
    }
    s += '\n';
  }
  return s;
}

std::string write_int_matrix_text(const IntMat& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += ' ';
      s += m(i, j).get_str();
    }
    s += '\n';
  }
  return s;
}

std::string render_canon_text(const CanonOutput& out) {
  std::string s = write_form_text(out.canonical);
  s += "# transform:\n";
  std::istringstream tin(write_int_matrix_text(out.transform));
  std::string line;
  while (std::getline(tin, line)) s += "#   " + line + "\n";
  s += "# charset_kind: " + out.kind + "\n";
  s += "# charset_size: " + std::to_string(out.charset_size) + "\n";
  s += "# hash: " + out.hash + "\n";
  s += "# certificate_version: " + std::to_string(kCertificateVersion) + "\n";
  return s;
}

namespace {

nlohmann::json rat_matrix_json(const RatMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json int_matrix_json(const IntMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string render_canon_json(const CanonOutput& out) {
  nlohmann::json j;
  j["n"] = out.n;
  j["canonical"] = rat_matrix_json(out.canonical);
  j["transform"] = int_matrix_json(out.transform);
  j["charset_kind"] = out.kind;
  j["charset_size"] = out.charset_size;
  j["hash"] = out.hash;
  j["certificate_version"] = kCertificateVersion;
  return j.dump(2) + "\n";
}

DedupReport dedup_forms(const std::vector<DedupInput>& inputs, CharsetKind kind, int jobs,
                        bool with_witnesses) {
  int m = static_cast<int>(inputs.size());
  std::vector<CanonicalResult> results(m);
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || m <= 1) {
    for (int i = 0; i < m; ++i) results[i] = canonical_form(inputs[i].form, kind);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex err_mutex;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&]() {
        while (true) {
          int i = next.fetch_add(1);
          if (i >= m || failed.load()) return;
          try {
            results[i] = canonical_form(inputs[i].form, kind);
          } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(err_mutex);
            failed.store(true);
            error = e.what();
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failed.load()) throw ValidationError("dedup: " + error);
  }

  DedupReport rep;
  rep.hashes.resize(m);
  rep.class_of.assign(m, -1);
  rep.witnesses.resize(m);
  std::vector<int> reps;  // input index of each class representative
  for (int i = 0; i < m; ++i) {
    rep.hashes[i] = results[i].hash;
    int cls = -1;
    for (int r : reps)
      if (results[r].canonical.gram == results[i].canonical.gram) {
        cls = r;
        break;
      }
    if (cls < 0) {
      reps.push_back(i);
      cls = i;
    }
    rep.class_of[i] = cls;
    if (with_witnesses) {
      IntMat w =
          mat_mul(results[cls].transform.mat, int_inverse_unimodular(results[i].transform.mat));
      Form check = conjugate(inputs[cls].form, w);
      if (check.gram != inputs[i].form.gram)
        throw ValidationError("dedup: witness verification failed (internal)");
      rep.witnesses[i] = std::move(w);
    }
  }
  rep.class_count = static_cast<int>(reps.size());
  return rep;
}

std::string render_dedup_report(const DedupReport& rep, const std::vector<DedupInput>& inputs) {
  std::string s = "inputs: " + std::to_string(inputs.size()) + "\n";
  s += "classes: " + std::to_string(rep.class_count) + "\n";
  for (size_t i = 0; i < inputs.size(); ++i) {
    s += std::to_string(i) + " " + inputs[i].name + " class=" + std::to_string(rep.class_of[i]) +
         " hash=" + rep.hashes[i] + "\n";
    if (rep.witnesses[i] && rep.class_of[i] != static_cast<int>(i)) {
      std::istringstream win(write_int_matrix_text(*rep.witnesses[i]));
      std::string line;
      while (std::getline(win, line)) s += "  witness: " + line + "\n";
    }
  }
  return s;
}

BenchResult bench_forms(const std::vector<Form>& forms, CharsetKind kind) {
  if (forms.empty()) throw ValidationError("bench: empty corpus");
  BenchResult r;
  r.count = static_cast<int>(forms.size());
  double total = 0;
  long stotal = 0;
  for (size_t i = 0; i < forms.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    CanonicalResult c = canonical_form(forms[i], kind);
    auto t1 = std::chrono::steady_clock::now();
    double dt = std::chrono::duration<double>(t1 - t0).count();
    long sz = c.charset_size;
    if (i == 0) {
      r.time_min = r.time_max = dt;
      r.size_min = r.size_max = sz;
    } else {
      r.time_min = std::min(r.time_min, dt);
      r.time_max = std::max(r.time_max, dt);
      r.size_min = std::min(r.size_min, sz);
      r.size_max = std::max(r.size_max, sz);
    }
    total += dt;
    stotal += sz;
  }
  r.time_avg = total / r.count;
  r.size_avg = static_cast<double>(stotal) / r.count;
  return r;
}

std::string render_bench(const BenchResult& r, CharsetKind kind) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "charset=%s samples=%d time[s] min=%.6f avg=%.6f max=%.6f  "
                "size min=%ld avg=%.2f max=%ld\n",
                charset_name(kind), r.count, r.time_min, r.time_avg, r.time_max, r.size_min,
                r.size_avg, r.size_max);
  return buf;
}

}  // namespace canform
