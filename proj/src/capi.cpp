/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/grouptop.h"

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouptop/abelian.hpp"
#include "grouptop/coset_table.hpp"
#include "grouptop/error.hpp"
#include "grouptop/perm_group.hpp"
#include "grouptop/pontryagin.hpp"
#include "grouptop/presentation.hpp"
#include "grouptop/reduction.hpp"
#include "grouptop/simplicial.hpp"

using json = nlohmann::ordered_json;

struct grouptop_presentation {
  grouptop::Presentation value;
};

struct grouptop_complex {
  grouptop::SimplicialComplex value;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

grouptop_status status_of(grouptop::ErrorKind kind) {
  switch (kind) {
    case grouptop::ErrorKind::Parse:
      return GROUPTOP_ERR_PARSE;
    case grouptop::ErrorKind::Domain:
      return GROUPTOP_ERR_DOMAIN;
    case grouptop::ErrorKind::Resource:
      return GROUPTOP_ERR_RESOURCE;
    case grouptop::ErrorKind::Io:
      return GROUPTOP_ERR_IO;
  }
  return GROUPTOP_ERR_DOMAIN;
}

grouptop_status invalid(const std::string& msg) {
  g_last_error = msg;
  return GROUPTOP_ERR_INVALID_ARGUMENT;
}

/// Runs the body, translating exceptions into status codes.
template <typename F>
grouptop_status guarded(F&& body) {
  try {
    body();
    return GROUPTOP_OK;
  } catch (const grouptop::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GROUPTOP_ERR_DOMAIN;
  }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

grouptop::Int parse_int(const std::string& text, const char* what) {
  try {
    return grouptop::Int(text);
  } catch (const std::invalid_argument&) {
    throw grouptop::Error(grouptop::ErrorKind::Parse,
                          std::string(what) + " is not an integer: " + text);
  }
}

grouptop::PermutationGroup realize(const grouptop::Presentation& p,
                                   std::uint64_t max_cosets) {
  return grouptop::to_permutation_group(
      grouptop::todd_coxeter(p, {}, static_cast<std::size_t>(max_cosets)));
}

std::vector<grouptop::Word> parse_words(const grouptop::Presentation& p,
                                        const char* const* words,
                                        std::size_t len) {
  std::vector<grouptop::Word> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(p.parse_word(words[i]));
  return out;
}

json abelian_json(const grouptop::FgAbelianGroup& a) {
  json factors = json::array();
  for (const grouptop::Int& d : a.invariant_factors())
    factors.push_back(d.get_str());
  return json{{"free_rank", a.free_rank()},
              {"invariant_factors", factors},
              {"text", a.to_text()}};
}

/// Summand text of one (co)homology degree under its ring: Z-degrees use
/// the abelian-group rendering, field degrees are Q^r, and Z/n degrees
/// spell out the full Z/n summands before the proper divisors.
std::string degree_text(const grouptop::CoefficientRing& ring,
                        const grouptop::DegreeSummary& d) {
  using grouptop::RingKind;
  if (ring.kind == RingKind::Integers)
    return grouptop::FgAbelianGroup(d.free_rank,
                                    d.torsion)  // torsion already canonical
        .to_text();
  if (ring.kind == RingKind::Rationals) {
    if (d.free_rank == 0) return "0";
    if (d.free_rank == 1) return "Q";
    return "Q^" + std::to_string(d.free_rank);
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d.free_rank; ++i) {
    if (!first) os << " ⊕ ";
    os << "Z/" << ring.modulus;
    first = false;
  }
  for (const grouptop::Int& t : d.torsion) {
    if (!first) os << " ⊕ ";
    os << "Z/" << t;
    first = false;
  }
  return first ? "0" : os.str();
}

json degrees_json(const grouptop::CohomologyReport& r) {
  json out = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    json torsion = json::array();
    for (const grouptop::Int& d : r.degrees[k].torsion)
      torsion.push_back(d.get_str());
    out.push_back(json{{"degree", k},
                       {"free_rank", r.degrees[k].free_rank},
                       {"torsion", torsion},
                       {"text", degree_text(r.ring, r.degrees[k])}});
  }
  return out;
}

json ladder_json(const grouptop::CohomologyReport& r) {
  json degrees = json::array();
  for (std::size_t k = 0; k < 4; ++k)
    degrees.push_back(degree_text(r.ring, r.degrees[k]));
  return json{{"ring", r.ring.to_text()}, {"degrees", degrees}};
}

std::string series_orders(const std::vector<grouptop::Subgroup>& chain) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) os << " ";
    os << chain[i].order();
  }
  return os.str();
}

json series_orders_json(const std::vector<grouptop::Subgroup>& chain) {
  json out = json::array();
  for (const auto& s : chain) out.push_back(s.order());
  return out;
}

std::string cells_text(const grouptop::ChainComplexData& c) {
  std::ostringstream os;
  os << c.cells[0].size() << " vertices, " << c.cells[1].size() << " edges, "
     << c.cells[2].size() << " triangles, " << c.cells[3].size()
     << " tetrahedra";
  return os.str();
}

json cells_json(const grouptop::ChainComplexData& c) {
  return json::array(
      {c.cells[0].size(), c.cells[1].size(), c.cells[2].size(),
       c.cells[3].size()});
}

/// Levels covered by a level-0 ("all levels") request: 1 up to the last
/// distinct term of the lower central series.
std::vector<std::size_t> lemma_levels(const grouptop::SubgroupSeries& series,
                                      std::uint32_t level) {
  if (level != 0) return {level};
  std::size_t last = series.lower_central.size();
  if (last > 1) --last;
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= last; ++l) out.push_back(l);
  return out;
}

}  // namespace

extern "C" {

const char* grouptop_last_error(void) { return g_last_error.c_str(); }

void grouptop_string_free(char* s) { std::free(s); }

grouptop_status grouptop_presentation_parse(const char* text,
                                            const char* block,
                                            grouptop_presentation** out) {
  if (!text || !out) return invalid("presentation_parse: null argument");
  return guarded([&] {
    grouptop::Presentation p =
        grouptop::parse_presentation(text, block ? block : "");
    *out = new grouptop_presentation{std::move(p)};
  });
}

void grouptop_presentation_free(grouptop_presentation* p) { delete p; }

grouptop_status grouptop_presentation_render(const grouptop_presentation* p,
                                             char** out) {
  if (!p || !out) return invalid("presentation_render: null argument");
  return guarded([&] { *out = dup_string(p->value.to_text()); });
}

grouptop_status grouptop_complex_parse(const char* json_text,
                                       grouptop_complex** out) {
  if (!json_text || !out) return invalid("complex_parse: null argument");
  return guarded([&] {
    *out = new grouptop_complex{
        grouptop::SimplicialComplex::parse_json(json_text)};
  });
}

void grouptop_complex_free(grouptop_complex* c) { delete c; }

grouptop_status grouptop_complex_render(const grouptop_complex* c,
                                        char** out) {
  if (!c || !out) return invalid("complex_render: null argument");
  return guarded([&] { *out = dup_string(c->value.to_json()); });
}

grouptop_status grouptop_complex_simplex_count(const grouptop_complex* c,
                                               uint64_t* out) {
  if (!c || !out) return invalid("complex_simplex_count: null argument");
  *out = c->value.simplex_count();
  return GROUPTOP_OK;
}

grouptop_status grouptop_run_abelianize(const grouptop_presentation* p,
                                        int as_json, char** out) {
  if (!p || !out) return invalid("abelianize: null argument");
  return guarded([&] {
    const grouptop::Presentation& pres = p->value;
    grouptop::FgAbelianGroup ab = grouptop::cokernel_of_rows(
        grouptop::abelianized_relation_matrix(pres), pres.generator_count());
    if (as_json) {
      json r{{"presentation", pres.to_text()},
             {"generators", pres.generator_count()},
             {"relators", pres.relators().size()},
             {"abelianization", abelian_json(ab)}};
      *out = dup_string(r.dump(2));
    } else {
      std::ostringstream os;
      os << "presentation: " << pres.to_text() << "\n"
         << "generators: " << pres.generator_count() << "\n"
         << "relators: " << pres.relators().size() << "\n"
         << "abelianization: " << ab.to_text() << "\n";
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_enumerate(const grouptop_presentation* p,
                                       const char* const* subgroup_words,
                                       size_t subgroup_len,
                                       uint64_t max_cosets, int as_json,
                                       char** out) {
  if (!p || !out || (subgroup_len > 0 && !subgroup_words))
    return invalid("enumerate: null argument");
  if (max_cosets == 0) return invalid("enumerate: max_cosets must be positive");
  return guarded([&] {
    const grouptop::Presentation& pres = p->value;
    std::vector<grouptop::Word> sub =
        parse_words(pres, subgroup_words, subgroup_len);
    grouptop::CosetTable t = grouptop::todd_coxeter(
        pres, sub, static_cast<std::size_t>(max_cosets));
    std::vector<std::string> sub_texts;
    for (const auto& w : sub) sub_texts.push_back(pres.word_text(w));
    if (as_json) {
      json r{{"presentation", pres.to_text()},
             {"subgroup", sub_texts},
             {"cosets", t.coset_count()}};
      r[sub.empty() ? "order" : "index"] = t.coset_count();
      r["high_water"] = t.high_water();
      *out = dup_string(r.dump(2));
    } else {
      std::ostringstream os;
      os << "presentation: " << pres.to_text() << "\n";
      if (sub_texts.empty()) {
        os << "subgroup: trivial\n";
      } else {
        os << "subgroup: [ ";
        for (std::size_t i = 0; i < sub_texts.size(); ++i)
          os << (i ? ", " : "") << sub_texts[i];
        os << " ]\n";
      }
      os << "cosets: " << t.coset_count() << "\n"
         << (sub.empty() ? "order: " : "index: ") << t.coset_count() << "\n"
         << "high water: " << t.high_water() << "\n";
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_series(const grouptop_presentation* p,
                                    uint64_t max_cosets, uint64_t element_cap,
                                    int as_json, char** out) {
  if (!p || !out) return invalid("series: null argument");
  if (max_cosets == 0 || element_cap == 0)
    return invalid("series: caps must be positive");
  return guarded([&] {
    const grouptop::Presentation& pres = p->value;
    grouptop::PermutationGroup g = realize(pres, max_cosets);
    std::size_t cap = static_cast<std::size_t>(element_cap);
    grouptop::SubgroupSeries s = grouptop::subgroup_series(g, cap);
    if (as_json) {
      json r{{"presentation", pres.to_text()},
             {"order", g.order(cap)},
             {"lower_central", series_orders_json(s.lower_central)},
             {"derived", series_orders_json(s.derived)},
             {"nilpotent", s.nilpotent}};
      if (s.nilpotency_class) r["nilpotency_class"] = *s.nilpotency_class;
      r["solvable"] = s.solvable;
      if (s.derived_length) r["derived_length"] = *s.derived_length;
      *out = dup_string(r.dump(2));
    } else {
      std::ostringstream os;
      os << "presentation: " << pres.to_text() << "\n"
         << "order: " << g.order(cap) << "\n"
         << "lower central orders: " << series_orders(s.lower_central) << "\n"
         << "derived orders: " << series_orders(s.derived) << "\n";
      os << "nilpotent: " << yesno(s.nilpotent);
      if (s.nilpotency_class) os << " (class " << *s.nilpotency_class << ")";
      os << "\n";
      os << "solvable: " << yesno(s.solvable);
      if (s.derived_length)
        os << " (derived length " << *s.derived_length << ")";
      os << "\n";
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_reduce(const grouptop_presentation* p,
                                    uint64_t max_cosets, uint64_t element_cap,
                                    int as_json, char** out) {
  if (!p || !out) return invalid("reduce: null argument");
  if (max_cosets == 0 || element_cap == 0)
    return invalid("reduce: caps must be positive");
  return guarded([&] {
    const grouptop::Presentation& pres = p->value;
    grouptop::PermutationGroup g = realize(pres, max_cosets);
    grouptop::ReductionTrace trace = grouptop::solvable_reduction(
        g, static_cast<std::size_t>(element_cap));
    if (as_json) {
      json steps = json::array();
      for (const auto& s : trace.steps) {
        json primes = json::array();
        for (const grouptop::Int& q : s.primes_used)
          primes.push_back(q.get_str());
        steps.push_back(json{{"order", s.order},
                             {"abelianization", s.abelianization.to_text()},
                             {"primes", primes},
                             {"killed", s.killed_count}});
      }
      json r{{"presentation", pres.to_text()},
             {"steps", steps},
             {"terminal_order", trace.terminal_order}};
      *out = dup_string(r.dump(2));
    } else {
      std::ostringstream os;
      os << "presentation: " << pres.to_text() << "\n";
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        os << "step " << i << ": order " << s.order << ", abelianization "
           << s.abelianization.to_text();
        if (s.primes_used.empty()) {
          os << ", terminal";
        } else {
          os << ", primes {";
          for (std::size_t j = 0; j < s.primes_used.size(); ++j)
            os << (j ? ", " : "") << s.primes_used[j];
          os << "}, killed " << s.killed_count;
        }
        os << "\n";
      }
      os << "terminal order " << trace.terminal_order << "\n";
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_classify(const grouptop_presentation* p,
                                      uint64_t max_cosets,
                                      uint64_t element_cap, int as_json,
                                      char** out) {
  if (!p || !out) return invalid("classify: null argument");
  if (max_cosets == 0 || element_cap == 0)
    return invalid("classify: caps must be positive");
  return guarded([&] {
    const grouptop::Presentation& pres = p->value;
    grouptop::TorsionClassification c = grouptop::classify_torsion_divisibility(
        pres, static_cast<std::size_t>(max_cosets),
        static_cast<std::size_t>(element_cap));
    if (as_json) {
      json primes = json::array();
      for (const auto& row : c.per_prime)
        primes.push_back(json{{"p", row.p.get_str()},
                              {"tor_p_nontrivial", row.tor_p_nontrivial},
                              {"p_divisible", row.p_divisible},
                              {"tor_p_ab_nontrivial", row.tor_p_ab_nontrivial},
                              {"condition_met", row.condition_met}});
      json r{{"presentation", pres.to_text()},
             {"order", c.order},
             {"is_torsion", c.is_torsion},
             {"abelianization", c.abelianization.to_text()},
             {"primes", primes}};
      *out = dup_string(r.dump(2));
    } else {
      std::ostringstream os;
      os << "presentation: " << pres.to_text() << "\n"
         << "order: " << c.order << "\n"
         << "torsion group: " << yesno(c.is_torsion) << "\n"
         << "abelianization: " << c.abelianization.to_text() << "\n";
      for (const auto& row : c.per_prime) {
        os << "p = " << row.p << ": torsion " << yesno(row.tor_p_nontrivial)
           << ", divisible " << yesno(row.p_divisible)
           << ", abelianized torsion " << yesno(row.tor_p_ab_nontrivial)
           << ", condition " << (row.condition_met ? "met" : "FAILED") << "\n";
      }
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_lemma(const grouptop_presentation* p,
                                   uint32_t level, uint64_t max_cosets,
                                   uint64_t element_cap, int as_json,
                                   char** out) {
  if (!p || !out) return invalid("lemma: null argument");
  if (max_cosets == 0 || element_cap == 0)
    return invalid("lemma: caps must be positive");
  return guarded([&] {
    const grouptop::Presentation& pres = p->value;
    grouptop::PermutationGroup g = realize(pres, max_cosets);
    std::size_t cap = static_cast<std::size_t>(element_cap);
    std::vector<std::size_t> levels =
        lemma_levels(grouptop::subgroup_series(g, cap), level);
    std::vector<grouptop::TensorEpimorphismCheck> checks;
    for (std::size_t l : levels)
      checks.push_back(grouptop::lcs_tensor_epimorphism_check(g, l, cap));
    if (as_json) {
      json rows = json::array();
      for (const auto& c : checks) {
        json witness = json::array();
        for (const auto& row : c.witness) witness.push_back(row);
        rows.push_back(json{{"level", c.level},
                            {"well_defined", c.well_defined},
                            {"surjective", c.surjective},
                            {"level_quotient", c.level_quotient.to_text()},
                            {"abelianization", c.abelianized.to_text()},
                            {"next_quotient", c.next_quotient.to_text()},
                            {"witness", witness}});
      }
      json r{{"presentation", pres.to_text()},
             {"order", g.order(cap)},
             {"levels", rows}};
      *out = dup_string(r.dump(2));
    } else {
      std::ostringstream os;
      os << "presentation: " << pres.to_text() << "\n"
         << "order: " << g.order(cap) << "\n";
      for (const auto& c : checks) {
        os << "level " << c.level << ": quotient " << c.level_quotient.to_text()
           << ", abelianization " << c.abelianized.to_text()
           << ", next quotient " << c.next_quotient.to_text()
           << ", well defined " << yesno(c.well_defined) << ", surjective "
           << yesno(c.surjective) << "\n";
      }
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_amalgam(const grouptop_presentation* p1,
                                     const grouptop_presentation* p2,
                                     const grouptop_presentation* over,
                                     const char* const* images1,
                                     const char* const* images2,
                                     size_t image_len, int as_json,
                                     char** out) {
  if (!p1 || !p2 || !out) return invalid("amalgam: null argument");
  if (image_len > 0 && (!images1 || !images2))
    return invalid("amalgam: null image list");
  if (!over && image_len > 0)
    return invalid("amalgam: images given without an amalgamating group");
  return guarded([&] {
    grouptop::Presentation trivial;
    const grouptop::Presentation& a = over ? over->value : trivial;
    std::vector<grouptop::Word> f1 =
        parse_words(p1->value, images1, image_len);
    std::vector<grouptop::Word> f2 =
        parse_words(p2->value, images2, image_len);
    grouptop::Presentation pushout =
        grouptop::amalgamated_product(p1->value, p2->value, a, f1, f2);
    grouptop::FgAbelianGroup ab = grouptop::cokernel_of_rows(
        grouptop::abelianized_relation_matrix(pushout),
        pushout.generator_count());
    std::vector<std::string> m1, m2;
    for (const auto& w : f1) m1.push_back(p1->value.word_text(w));
    for (const auto& w : f2) m2.push_back(p2->value.word_text(w));
    if (as_json) {
      json r{{"factor1", p1->value.to_text()},
             {"factor2", p2->value.to_text()},
             {"over", a.to_text()},
             {"map1", m1},
             {"map2", m2},
             {"pushout", pushout.to_text()},
             {"generators", pushout.generator_count()},
             {"relators", pushout.relators().size()},
             {"abelianization", abelian_json(ab)}};
      *out = dup_string(r.dump(2));
    } else {
      std::ostringstream os;
      os << "factor 1: " << p1->value.to_text() << "\n"
         << "factor 2: " << p2->value.to_text() << "\n";
      if (over) {
        os << "over: " << a.to_text() << "\n";
        for (std::size_t i = 0; i < image_len; ++i)
          os << "map: " << a.generator_names()[i] << " -> " << m1[i] << " | "
             << m2[i] << "\n";
      } else {
        os << "over: trivial\n";
      }
      os << "pushout: " << pushout.to_text() << "\n"
         << "abelianization: " << ab.to_text() << "\n";
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_homology(const grouptop_complex* c,
                                      const grouptop_complex* rel,
                                      const char* coefficients, int cochain,
                                      int as_json, char** out) {
  if (!c || !coefficients || !out) return invalid("homology: null argument");
  return guarded([&] {
    grouptop::CoefficientRing ring =
        grouptop::parse_coefficient_ring(coefficients);
    std::optional<grouptop::SimplicialComplex> sub;
    if (rel) sub = rel->value;
    grouptop::ChainComplexData chain =
        grouptop::build_chain_complex(c->value, ring, sub);
    grouptop::CohomologyReport r =
        cochain ? grouptop::cohomology(chain) : grouptop::homology(chain);
    if (as_json) {
      json j{{"cells", cells_json(chain)},
             {"relative", r.relative},
             {"coefficients", ring.to_text()},
             {"cochain", r.cochain},
             {"degrees", degrees_json(r)}};
      *out = dup_string(j.dump(2));
    } else {
      std::ostringstream os;
      os << "cells: " << cells_text(chain) << "\n"
         << "relative: " << yesno(r.relative) << "\n"
         << "coefficients: " << ring.to_text() << "\n";
      for (std::size_t k = 0; k < 4; ++k)
        os << (r.cochain ? "H^" : "H_") << k << " = "
           << degree_text(ring, r.degrees[k]) << "\n";
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_bockstein(const grouptop_complex* c,
                                       const grouptop_complex* rel,
                                       const char* sequence,
                                       const char* modulus, int as_json,
                                       char** out) {
  if (!c || !sequence || !modulus || !out)
    return invalid("bockstein: null argument");
  std::string kind_text = sequence;
  grouptop::TripleKind kind;
  if (kind_text == "zn") {
    kind = grouptop::TripleKind::IntegersModN;
  } else if (kind_text == "p2") {
    kind = grouptop::TripleKind::ModPSquared;
  } else {
    return invalid("bockstein: sequence must be \"zn\" or \"p2\", got \"" +
                   kind_text + "\"");
  }
  return guarded([&] {
    grouptop::Int n = parse_int(modulus, "modulus");
    std::optional<grouptop::SimplicialComplex> sub;
    if (rel) sub = rel->value;
    grouptop::CoefficientTriple triple{kind, n};
    grouptop::BocksteinReport r =
        grouptop::bockstein_check(c->value, sub, triple);
    grouptop::ChainComplexData chain = grouptop::build_chain_complex(
        c->value, grouptop::CoefficientRing::integers(), sub);
    if (as_json) {
      json slots = json::array();
      for (const auto& s : r.slots)
        slots.push_back(json{{"at", s.at},
                             {"exact", s.exact},
                             {"image", s.image.to_text()},
                             {"kernel", s.kernel.to_text()}});
      json connecting = json::array();
      for (std::size_t k = 0; k < 4; ++k)
        connecting.push_back(
            json{{"degree", k},
                 {"image", r.connecting_image[k].to_text()},
                 {"kernel", r.connecting_kernel[k].to_text()}});
      json j{{"cells", cells_json(chain)},
             {"sequence", r.triple.to_text()},
             {"relative", r.relative},
             {"exact", r.exact},
             {"ladders",
              json{{"first", ladder_json(r.first)},
                   {"middle", ladder_json(r.middle)},
                   {"third", ladder_json(r.third)}}},
             {"slots", slots},
             {"connecting", connecting}};
      *out = dup_string(j.dump(2));
    } else {
      std::ostringstream os;
      os << "cells: " << cells_text(chain) << "\n"
         << "sequence: " << r.triple.to_text() << "\n"
         << "relative: " << yesno(r.relative) << "\n"
         << "exact: " << yesno(r.exact) << "\n";
      auto ladder_line = [&](const char* name,
                             const grouptop::CohomologyReport& ladder) {
        os << "ladder " << name << " (" << ladder.ring.to_text() << "):";
        for (std::size_t k = 0; k < 4; ++k)
          os << (k ? ", " : " ") << "H^" << k << " = "
             << degree_text(ladder.ring, ladder.degrees[k]);
        os << "\n";
      };
      ladder_line("first", r.first);
      ladder_line("middle", r.middle);
      ladder_line("third", r.third);
      for (const auto& s : r.slots)
        os << "slot " << s.at << ": " << (s.exact ? "exact" : "NOT EXACT")
           << " (image " << s.image.to_text() << ", kernel "
           << s.kernel.to_text() << ")\n";
      for (std::size_t k = 0; k < 4; ++k)
        os << "connecting degree " << k << ": image "
           << r.connecting_image[k].to_text() << ", kernel "
           << r.connecting_kernel[k].to_text() << "\n";
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_run_pontryagin(uint64_t triangles,
                                        uint32_t generations,
                                        const char* prime,
                                        uint64_t simplex_cap, int as_json,
                                        char** out) {
  if (!prime || !out) return invalid("pontryagin: null argument");
  if (simplex_cap == 0) return invalid("pontryagin: cap must be positive");
  return guarded([&] {
    grouptop::Int p = parse_int(prime, "prime");
    grouptop::FateTable table = grouptop::rel_class_fate(
        static_cast<std::size_t>(triangles), generations, p,
        static_cast<std::size_t>(simplex_cap));
    if (as_json) {
      json rows = json::array();
      for (const auto& row : table.rows)
        rows.push_back(json{{"generation", row.generation},
                            {"faces", row.faces},
                            {"dim", row.dim}});
      json r{{"triangles", table.n},
             {"prime", table.p.get_str()},
             {"generations", generations},
             {"rows", rows}};
      *out = dup_string(r.dump(2));
    } else {
      std::ostringstream os;
      os << "triangles: " << table.n << "\n"
         << "prime: " << table.p << "\n"
         << "generation  faces  dim H^2(stage, boundary)\n";
      for (const auto& row : table.rows)
        os << std::setw(10) << row.generation << "  " << std::setw(5)
           << row.faces << "  " << row.dim << "\n";
      *out = dup_string(os.str());
    }
  });
}

grouptop_status grouptop_export_stage(uint64_t triangles,
                                      uint32_t generations,
                                      uint64_t simplex_cap,
                                      char** out_complex_json,
                                      char** out_boundary_json) {
  if (!out_complex_json && !out_boundary_json)
    return invalid("export_stage: no output requested");
  if (simplex_cap == 0) return invalid("export_stage: cap must be positive");
  return guarded([&] {
    grouptop::PontryaginStage stage =
        grouptop::triangulated_disk(static_cast<std::size_t>(triangles));
    for (uint32_t g = 0; g < generations; ++g) {
      if (stage.complex.simplices(2).size() * 9 >
          static_cast<std::size_t>(simplex_cap))
        throw grouptop::Error(grouptop::ErrorKind::Resource,
                              "stage growth past the simplex cap");
      stage = grouptop::next_stage(stage);
    }
    if (out_complex_json)
      *out_complex_json = dup_string(stage.complex.to_json());
    if (out_boundary_json)
      *out_boundary_json = dup_string(stage.boundary_mark.to_json());
  });
}

}  // extern "C"
