#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "canform/form_io.hpp"
#include "canform/random.hpp"
#include "canform/symplectic.hpp"

namespace fs = std::filesystem;
using namespace canform;

namespace {

int jobs_from_env(int cli_value) {
  if (cli_value > 0) return cli_value;
  if (const char* env = std::getenv("CANFORM_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::vector<std::string> collect_inputs(const std::string& path) {
  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    for (const auto& e : fs::directory_iterator(path))
      if (e.is_regular_file()) files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::string line;
    while (std::getline(in, line)) {
      size_t a = line.find_first_not_of(" \t");
      if (a == std::string::npos || line[a] == '#') continue;
      size_t b = line.find_last_not_of(" \t\r");
      files.push_back(line.substr(a, b - a + 1));
    }
  }
  return files;
}

int cmd_canon(const std::string& file, const std::string& kind_name, bool symplectic, bool json) {
  Form a = parse_form_file(file);
  CanonOutput out;
  out.n = a.n;
  if (symplectic) {
    SpCanonicalResult r = canonical_form_sp(a, charset_from_name(kind_name));
    out.canonical = r.canonical.gram;
    out.transform = r.transform.mat;
    out.kind = std::string("sp-") + charset_name(r.kind);
    out.charset_size = r.charset_size;
    out.hash = r.hash;
  } else {
    CanonicalResult r = canonical_form(a, charset_from_name(kind_name));
    out.canonical = r.canonical.gram;
    out.transform = r.transform.mat;
    out.kind = charset_name(r.kind);
    out.charset_size = r.charset_size;
    out.hash = r.hash;
  }
  std::cout << (json ? render_canon_json(out) : render_canon_text(out));
  return 0;
}

int cmd_stab(const std::string& file, const std::string& kind_name) {
  Form a = parse_form_file(file);
  StabilizerResult r = stabilizer(a, charset_from_name(kind_name));
  std::cout << "order: " << r.order.get_str() << "\n";
  std::cout << "generators: " << r.generators.size() << "\n";
  for (size_t i = 0; i < r.generators.size(); ++i) {
    std::cout << "# generator " << i << "\n";
    std::cout << write_int_matrix_text(r.generators[i].mat);
  }
  return 0;
}

int cmd_isom(const std::string& file_a, const std::string& file_b, const std::string& kind_name) {
  Form a = parse_form_file(file_a);
  Form b = parse_form_file(file_b);
  std::optional<Unimodular> w = is_equivalent(a, b, charset_from_name(kind_name));
  if (w) {
    std::cout << "equivalent\n" << write_int_matrix_text(w->mat);
  } else {
    std::cout << "inequivalent\n";
  }
  return 0;
}

int cmd_dedup(const std::string& path, const std::string& kind_name, int jobs, bool witnesses) {
  std::vector<std::string> files = collect_inputs(path);
  if (files.empty()) throw ValidationError("dedup: no inputs");
  std::vector<DedupInput> inputs;
  inputs.reserve(files.size());
  for (const std::string& f : files) inputs.push_back({f, parse_form_file(f)});
  DedupReport rep = dedup_forms(inputs, charset_from_name(kind_name), jobs, witnesses);
  std::cout << render_dedup_report(rep, inputs);
  return 0;
}

int cmd_bench(const std::string& dir, const std::string& kind_name) {
  std::vector<std::string> files = collect_inputs(dir);
  if (files.empty()) throw ValidationError("bench: empty corpus");
  std::vector<Form> forms;
  forms.reserve(files.size());
  for (const std::string& f : files) forms.push_back(parse_form_file(f));
  BenchResult r = bench_forms(forms, charset_from_name(kind_name));
  std::cout << render_bench(r, charset_from_name(kind_name));
  return 0;
}

int cmd_gen(const std::string& outdir, int n, int count, uint64_t seed) {
  fs::create_directories(outdir);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    Form a = random_form(n, rng);
    char name[64];
    std::snprintf(name, sizeof(name), "%04d.form", i);
    std::ofstream out(fs::path(outdir) / name);
    out << write_form_text(a.gram);
  }
  std::cout << "wrote " << count << " forms to " << outdir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical forms of positive definite matrices under GL_n(Z) and Sp_2n(Z)"};
  app.require_subcommand(1);

  std::string file, file_b, kind = "ms", outdir;
  bool symplectic = false, json = false, witnesses = false;
  int jobs = 0, gen_n = 10, gen_count = 10;
  uint64_t seed = 1;

  auto add_kind = [&kind](CLI::App* sub, bool with_ps) {
    sub->add_option("--charset", kind,
                    with_ps ? "characteristic vector set (ps|ms|cv|vor)"
                            : "characteristic vector set (ms|cv|vor)")
        ->default_val("ms");
  };

  CLI::App* canon = app.add_subcommand("canon", "canonical form of one form");
  canon->add_option("file", file, "FormFile input")->required();
  add_kind(canon, false);
  canon->add_flag("--symplectic", symplectic, "canonicalize under Sp_2n(Z)");
  canon->add_flag("--json", json, "emit JSON");

  CLI::App* stab = app.add_subcommand("stab", "stabilizer generators and order");
  stab->add_option("file", file, "FormFile input")->required();
  add_kind(stab, true);

  CLI::App* isom = app.add_subcommand("isom", "equivalence test with witness");
  isom->add_option("fileA", file, "first form")->required();
  isom->add_option("fileB", file_b, "second form")->required();
  add_kind(isom, false);

  CLI::App* dedup = app.add_subcommand("dedup", "partition a list of forms into classes");
  dedup->add_option("path", file, "list file or directory")->required();
  add_kind(dedup, false);
  dedup->add_option("--jobs", jobs, "parallel canonicalizations (env CANFORM_JOBS)");
  dedup->add_flag("--witnesses", witnesses, "emit equivalence witnesses");

  CLI::App* bench = app.add_subcommand("bench", "timing table over a corpus directory");
  bench->add_option("dir", file, "corpus directory")->required();
  add_kind(bench, false);

  CLI::App* gen = app.add_subcommand("gen", "generate random forms (basis entries in {-n..n})");
  gen->add_option("outdir", outdir, "output directory")->required();
  gen->add_option("--n", gen_n, "dimension")->default_val(10);
  gen->add_option("--count", gen_count, "number of forms")->default_val(10);
  gen->add_option("--seed", seed, "rng seed")->default_val(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (canon->parsed()) return cmd_canon(file, kind, symplectic, json);
    if (stab->parsed()) return cmd_stab(file, kind);
    if (isom->parsed()) return cmd_isom(file, file_b, kind);
    if (dedup->parsed()) return cmd_dedup(file, kind, jobs_from_env(jobs), witnesses);
    if (bench->parsed()) return cmd_bench(file, kind);
    if (gen->parsed()) return cmd_gen(outdir, gen_n, gen_count, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
