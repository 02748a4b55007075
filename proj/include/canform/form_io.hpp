#pragma once

#include <iosfwd>
#include <optional>

#include "canform/canonical.hpp"

namespace canform {

// FormFile: optional '#' comment and blank lines anywhere; first data line
// holds n, the next n data lines hold n whitespace-separated rationals
// ("p/q" or plain integers). Trailing non-comment content is an error.
RatMat parse_rat_matrix(std::istream& in);
Form parse_form_text(const std::string& text);
Form parse_form_file(const std::string& path);

std::string write_form_text(const RatMat& gram);
std::string write_int_matrix_text(const IntMat& m);

struct CanonOutput {
  int n = 0;
  RatMat canonical;
  IntMat transform;
  std::string kind;
  int charset_size = 0;
  std::string hash;
};

// FormFile of the canonical Gram followed by '#'-comment metadata, so the
// output re-parses as a FormFile
std::string render_canon_text(const CanonOutput& out);
std::string render_canon_json(const CanonOutput& out);

struct DedupInput {
  std::string name;
  Form form;
};

struct DedupReport {
  std::vector<std::string> hashes;
  std::vector<int> class_of;  // class id = input index of the first representative
  int class_count = 0;
  std::vector<std::optional<IntMat>> witnesses;  // W^T A_rep W = A_i
};

// jobs > 1 runs the per-form canonicalizations concurrently; the report is
// merged by input index and identical to the serial run
DedupReport dedup_forms(const std::vector<DedupInput>& inputs, CharsetKind kind, int jobs,
                        bool with_witnesses);
std::string render_dedup_report(const DedupReport& rep, const std::vector<DedupInput>& inputs);

struct BenchResult {
  int count = 0;
  double time_min = 0, time_avg = 0, time_max = 0;  // seconds
  long size_min = 0, size_max = 0;
  double size_avg = 0;
};

BenchResult bench_forms(const std::vector<Form>& forms, CharsetKind kind);
std::string render_bench(const BenchResult& r, CharsetKind kind);

}  // namespace canform
