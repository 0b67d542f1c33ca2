/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Batch front end over the C API (the only library surface linked here).
// Every subcommand reads plain files, runs one operation, and prints one
// report to standard output, as stable text or as a JSON envelope
// {"schema_version": "1", "command": ..., "result": ...}.  Exit codes:
// 0 success, 1 bad input (parse/domain/io), 2 a resource cap was hit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grouptop/grouptop.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultMaxCosets = 200000;
constexpr std::uint64_t kDefaultElementCap = 1000000;
constexpr std::uint64_t kDefaultSimplexCap = 100000;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_of(grouptop_status st) {
  return st == GROUPTOP_ERR_RESOURCE ? 2 : 1;
}

[[noreturn]] void fail(grouptop_status st, const std::string& stage) {
  throw CliError{exit_code_of(st), stage + ": " + grouptop_last_error()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw CliError{1, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out.good()) throw CliError{1, "cannot write " + path};
}

struct StringDeleter {
  void operator()(char* s) const { grouptop_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct PresentationDeleter {
  void operator()(grouptop_presentation* p) const {
    grouptop_presentation_free(p);
  }
};
using PresentationHandle =
    std::unique_ptr<grouptop_presentation, PresentationDeleter>;

struct ComplexDeleter {
  void operator()(grouptop_complex* c) const { grouptop_complex_free(c); }
};
using ComplexHandle = std::unique_ptr<grouptop_complex, ComplexDeleter>;

PresentationHandle load_presentation(const std::string& path,
                                     const std::string& block) {
  std::string text = slurp(path);
  grouptop_presentation* raw = nullptr;
  grouptop_status st =
      grouptop_presentation_parse(text.c_str(), block.c_str(), &raw);
  if (st != GROUPTOP_OK) fail(st, path);
  return PresentationHandle(raw);
}

ComplexHandle load_complex(const std::string& path, std::uint64_t cap) {
  std::string text = slurp(path);
  grouptop_complex* raw = nullptr;
  grouptop_status st = grouptop_complex_parse(text.c_str(), &raw);
  if (st != GROUPTOP_OK) fail(st, path);
  ComplexHandle handle(raw);
  std::uint64_t count = 0;
  grouptop_complex_simplex_count(handle.get(), &count);
  if (count > cap)
    throw CliError{2, path + ": " + std::to_string(count) +
                          " simplices exceed the cap of " +
                          std::to_string(cap)};
  return handle;
}

std::vector<const char*> c_words(const std::vector<std::string>& words) {
  std::vector<const char*> out;
  out.reserve(words.size());
  for (const std::string& w : words) out.push_back(w.c_str());
  return out;
}

/// Prints the report: text verbatim, or wrapped in the JSON envelope.
void emit(const std::string& command, bool as_json, const char* report) {
  if (!as_json) {
    std::cout << report;
    return;
  }
  ordered_json envelope{{"schema_version", "1"},
                        {"command", command},
                        {"result", ordered_json::parse(report)}};
  std::cout << envelope.dump(2) << "\n";
}

struct CommonOptions {
  std::string format = "text";
  std::uint64_t max_cosets = kDefaultMaxCosets;
  std::uint64_t element_cap = kDefaultElementCap;
  std::uint64_t simplex_cap = kDefaultSimplexCap;

  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--max-cosets", opts.max_cosets,
                  "Coset ceiling for enumerations")
      ->envname("GROUPTOP_MAX_COSETS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--element-cap", opts.element_cap,
                  "Group element ceiling for closures")
      ->envname("GROUPTOP_ELEMENT_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--simplex-cap", opts.simplex_cap,
                  "Simplex ceiling for complexes and stage growth")
      ->envname("GROUPTOP_SIMPLEX_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Workbench for finitely presented groups and finite complexes: "
      "abelianization, coset enumeration, subgroup series, torsion "
      "reduction and classification, amalgamated pushouts, simplicial "
      "(co)homology, coefficient-sequence exactness, and degree-two disk "
      "stage towers."};
  app.require_subcommand(1);

  // One option block per subcommand keeps every invocation independent.
  struct {
    CommonOptions common;
    std::string file, block;
  } abelianize;
  struct {
    CommonOptions common;
    std::string file, block;
    std::vector<std::string> subgroup;
  } enumerate;
  struct {
    CommonOptions common;
    std::string file, block;
  } series;
  struct {
    CommonOptions common;
    std::string file, block;
  } reduce;
  struct {
    CommonOptions common;
    std::string file, block;
  } classify;
  struct {
    CommonOptions common;
    std::string file, block;
    std::uint32_t level = 0;
  } lemma;
  struct {
    CommonOptions common;
    std::string file1, file2, over_file;
    std::vector<std::string> map1, map2;
  } amalgam;
  struct {
    CommonOptions common;
    std::string file, rel_file;
    std::string coefficients = "z";
    bool relative = false;
    bool cochain = false;
  } homology;
  struct {
    CommonOptions common;
    std::string file, rel_file;
    std::string sequence = "zn";
    std::string modulus = "2";
    bool relative = false;
  } bockstein;
  struct {
    CommonOptions common;
    std::uint64_t triangles = 1;
    std::uint32_t generations = 2;
    std::string prime = "2";
    std::string export_file, export_boundary_file;
  } pontryagin;

  CLI::App* cmd_abelianize = app.add_subcommand(
      "abelianize", "Invariant factors of a presented group's abelianization");
  cmd_abelianize->add_option("file", abelianize.file, "Presentation file")
      ->required();
  cmd_abelianize->add_option("--block", abelianize.block,
                             "Named block inside the file");
  add_common(cmd_abelianize, abelianize.common);

  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate", "Coset enumeration (group order, or subgroup index)");
  cmd_enumerate->add_option("file", enumerate.file, "Presentation file")
      ->required();
  cmd_enumerate->add_option("--block", enumerate.block,
                            "Named block inside the file");
  cmd_enumerate->add_option("--subgroup", enumerate.subgroup,
                            "Subgroup generator word (repeatable)");
  add_common(cmd_enumerate, enumerate.common);

  CLI::App* cmd_series = app.add_subcommand(
      "series", "Lower central and derived series of a finite group");
  cmd_series->add_option("file", series.file, "Presentation file")->required();
  cmd_series->add_option("--block", series.block,
                         "Named block inside the file");
  add_common(cmd_series, series.common);

  CLI::App* cmd_reduce = app.add_subcommand(
      "reduce", "Iterated torsion-kill reduction down to a terminal group");
  cmd_reduce->add_option("file", reduce.file, "Presentation file")->required();
  cmd_reduce->add_option("--block", reduce.block,
                         "Named block inside the file");
  add_common(cmd_reduce, reduce.common);

  CLI::App* cmd_classify = app.add_subcommand(
      "classify13", "Per-prime torsion and divisibility classification");
  cmd_classify->add_option("file", classify.file, "Presentation file")
      ->required();
  cmd_classify->add_option("--block", classify.block,
                           "Named block inside the file");
  add_common(cmd_classify, classify.common);

  CLI::App* cmd_lemma = app.add_subcommand(
      "lemma32",
      "Tensor epimorphism certificate on the lower central series");
  cmd_lemma->add_option("file", lemma.file, "Presentation file")->required();
  cmd_lemma->add_option("--block", lemma.block, "Named block inside the file");
  cmd_lemma
      ->add_option("--level", lemma.level,
                   "Series level to check (0 = every level)")
      ->capture_default_str();
  add_common(cmd_lemma, lemma.common);

  CLI::App* cmd_amalgam = app.add_subcommand(
      "amalgam", "Pushout of two presentations along a common subgroup");
  cmd_amalgam->add_option("file1", amalgam.file1, "First presentation file")
      ->required();
  cmd_amalgam->add_option("file2", amalgam.file2, "Second presentation file")
      ->required();
  cmd_amalgam->add_option("--over", amalgam.over_file,
                          "Amalgamating presentation file (default trivial)");
  cmd_amalgam->add_option(
      "--map1", amalgam.map1,
      "Image in factor 1 of each amalgam generator (repeatable, in order)");
  cmd_amalgam->add_option(
      "--map2", amalgam.map2,
      "Image in factor 2 of each amalgam generator (repeatable, in order)");
  add_common(cmd_amalgam, amalgam.common);

  CLI::App* cmd_homology = app.add_subcommand(
      "homology", "Simplicial (co)homology of a complex from JSON");
  cmd_homology->add_option("file", homology.file, "Complex JSON file")
      ->required();
  cmd_homology
      ->add_option("--coefficients", homology.coefficients,
                   "Coefficient ring: z, q, or z/N")
      ->capture_default_str();
  CLI::Option* rel_opt = cmd_homology->add_option(
      "--rel", homology.rel_file, "Subcomplex JSON file to quotient out");
  cmd_homology
      ->add_flag("--relative", homology.relative,
                 "Compute relative to the --rel subcomplex")
      ->needs(rel_opt);
  cmd_homology->add_flag("--cochain", homology.cochain,
                         "Report cohomology instead of homology");
  add_common(cmd_homology, homology.common);

  CLI::App* cmd_bockstein = app.add_subcommand(
      "bockstein",
      "Long-exact-sequence check for a short exact coefficient sequence");
  cmd_bockstein->add_option("file", bockstein.file, "Complex JSON file")
      ->required();
  CLI::Option* brel_opt = cmd_bockstein->add_option(
      "--rel", bockstein.rel_file, "Subcomplex JSON file to quotient out");
  cmd_bockstein
      ->add_flag("--relative", bockstein.relative,
                 "Compute relative to the --rel subcomplex")
      ->needs(brel_opt);
  cmd_bockstein
      ->add_option("--sequence", bockstein.sequence,
                   "zn: integers onto mod n; p2: mod p into mod p squared")
      ->check(CLI::IsMember({"zn", "p2"}))
      ->capture_default_str();
  cmd_bockstein
      ->add_option("--modulus", bockstein.modulus, "The n or p of the sequence")
      ->capture_default_str();
  add_common(cmd_bockstein, bockstein.common);

  CLI::App* cmd_pontryagin = app.add_subcommand(
      "pontryagin",
      "Relative 2-class fate table under repeated degree-two patching");
  cmd_pontryagin
      ->add_option("--triangles", pontryagin.triangles,
                   "Triangles in the starting fan disk")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_pontryagin
      ->add_option("--generations", pontryagin.generations,
                   "Patching rounds to apply")
      ->capture_default_str();
  cmd_pontryagin->add_option("--prime", pontryagin.prime, "Coefficient prime")
      ->capture_default_str();
  cmd_pontryagin->add_option("--export", pontryagin.export_file,
                             "Write the final stage complex JSON here");
  cmd_pontryagin->add_option("--export-boundary",
                             pontryagin.export_boundary_file,
                             "Write the marked boundary JSON here");
  add_common(cmd_pontryagin, pontryagin.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    char* report = nullptr;
    if (*cmd_abelianize) {
      auto p = load_presentation(abelianize.file, abelianize.block);
      grouptop_status st = grouptop_run_abelianize(
          p.get(), abelianize.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "abelianize");
      ApiString owned(report);
      emit("abelianize", abelianize.common.json(), owned.get());
    } else if (*cmd_enumerate) {
      auto p = load_presentation(enumerate.file, enumerate.block);
      std::vector<const char*> words = c_words(enumerate.subgroup);
      grouptop_status st = grouptop_run_enumerate(
          p.get(), words.data(), words.size(), enumerate.common.max_cosets,
          enumerate.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "enumerate");
      ApiString owned(report);
      emit("enumerate", enumerate.common.json(), owned.get());
    } else if (*cmd_series) {
      auto p = load_presentation(series.file, series.block);
      grouptop_status st =
          grouptop_run_series(p.get(), series.common.max_cosets,
                              series.common.element_cap,
                              series.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "series");
      ApiString owned(report);
      emit("series", series.common.json(), owned.get());
    } else if (*cmd_reduce) {
      auto p = load_presentation(reduce.file, reduce.block);
      grouptop_status st =
          grouptop_run_reduce(p.get(), reduce.common.max_cosets,
                              reduce.common.element_cap,
                              reduce.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "reduce");
      ApiString owned(report);
      emit("reduce", reduce.common.json(), owned.get());
    } else if (*cmd_classify) {
      auto p = load_presentation(classify.file, classify.block);
      grouptop_status st =
          grouptop_run_classify(p.get(), classify.common.max_cosets,
                                classify.common.element_cap,
                                classify.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "classify13");
      ApiString owned(report);
      emit("classify13", classify.common.json(), owned.get());
    } else if (*cmd_lemma) {
      auto p = load_presentation(lemma.file, lemma.block);
      grouptop_status st = grouptop_run_lemma(
          p.get(), lemma.level, lemma.common.max_cosets,
          lemma.common.element_cap, lemma.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "lemma32");
      ApiString owned(report);
      emit("lemma32", lemma.common.json(), owned.get());
    } else if (*cmd_amalgam) {
      auto p1 = load_presentation(amalgam.file1, "");
      auto p2 = load_presentation(amalgam.file2, "");
      PresentationHandle over;
      if (!amalgam.over_file.empty())
        over = load_presentation(amalgam.over_file, "");
      if (amalgam.map1.size() != amalgam.map2.size())
        throw CliError{1, "amalgam: --map1 and --map2 need the same length"};
      std::vector<const char*> m1 = c_words(amalgam.map1);
      std::vector<const char*> m2 = c_words(amalgam.map2);
      grouptop_status st = grouptop_run_amalgam(
          p1.get(), p2.get(), over.get(), m1.data(), m2.data(), m1.size(),
          amalgam.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "amalgam");
      ApiString owned(report);
      emit("amalgam", amalgam.common.json(), owned.get());
    } else if (*cmd_homology) {
      auto c = load_complex(homology.file, homology.common.simplex_cap);
      ComplexHandle rel;
      if (!homology.rel_file.empty())
        rel = load_complex(homology.rel_file, homology.common.simplex_cap);
      grouptop_status st = grouptop_run_homology(
          c.get(), rel.get(), homology.coefficients.c_str(),
          homology.cochain ? 1 : 0, homology.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "homology");
      ApiString owned(report);
      emit("homology", homology.common.json(), owned.get());
    } else if (*cmd_bockstein) {
      auto c = load_complex(bockstein.file, bockstein.common.simplex_cap);
      ComplexHandle rel;
      if (!bockstein.rel_file.empty())
        rel = load_complex(bockstein.rel_file, bockstein.common.simplex_cap);
      grouptop_status st = grouptop_run_bockstein(
          c.get(), rel.get(), bockstein.sequence.c_str(),
          bockstein.modulus.c_str(), bockstein.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "bockstein");
      ApiString owned(report);
      emit("bockstein", bockstein.common.json(), owned.get());
    } else if (*cmd_pontryagin) {
      grouptop_status st = grouptop_run_pontryagin(
          pontryagin.triangles, pontryagin.generations,
          pontryagin.prime.c_str(), pontryagin.common.simplex_cap,
          pontryagin.common.json(), &report);
      if (st != GROUPTOP_OK) fail(st, "pontryagin");
      ApiString owned(report);
      emit("pontryagin", pontryagin.common.json(), owned.get());
      if (!pontryagin.export_file.empty() ||
          !pontryagin.export_boundary_file.empty()) {
        char* complex_json = nullptr;
        char* boundary_json = nullptr;
        st = grouptop_export_stage(
            pontryagin.triangles, pontryagin.generations,
            pontryagin.common.simplex_cap,
            pontryagin.export_file.empty() ? nullptr : &complex_json,
            pontryagin.export_boundary_file.empty() ? nullptr
                                                    : &boundary_json);
        if (st != GROUPTOP_OK) fail(st, "pontryagin export");
        ApiString owned_complex(complex_json);
        ApiString owned_boundary(boundary_json);
        if (complex_json) spill(pontryagin.export_file, complex_json);
        if (boundary_json)
          spill(pontryagin.export_boundary_file, boundary_json);
      }
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return 0;
}
