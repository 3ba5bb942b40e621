// catalog.hpp -- the enumerate command's document: every irreducible cyclic
// code of length n over F_q, grouped the way the reference tables group
// them, with text, JSON and CSV renderings.
#ifndef CYCLOWEIGHT_CATALOG_HPP
#define CYCLOWEIGHT_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycloweight/oracle.hpp"
#include "cycloweight/wdist.hpp"

namespace cycloweight {

inline constexpr const char* kJsonSchema = "cycloweight/1";

struct CatalogRow {
    std::string h;           // rendered check polynomial
    std::string enumerator;  // rendered factored weight enumerator
    // weight -> count, counts in decimal; present when built with expand
    std::optional<std::vector<std::pair<std::uint32_t, std::string>>> expanded;
    friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

struct CatalogGroup {
    std::string header;  // "[31;288,2,216]"
    std::uint32_t k = 0, d = 0;
    FactorKind kind = FactorKind::binomial;
    std::optional<std::uint32_t> nu2u;  // trinomial groups only
    std::vector<CatalogRow> rows;
    friend bool operator==(const CatalogGroup&, const CatalogGroup&) = default;
};

struct CatalogDocument {
    std::uint32_t q = 0, n = 0;
    CaseParameters params;
    std::vector<CatalogGroup> groups;
    std::vector<std::pair<std::string, std::uint64_t>> summary;  // label -> rows
    friend bool operator==(const CatalogDocument&, const CatalogDocument&) = default;
};

// Groups ordered binomials first, then by dimension, then nu2(u) descending,
// then minimum distance (the reference table order); rows within a group by
// the canonical coefficient encoding of h.
CatalogDocument build_catalog(const FieldTower& tower, const CaseParameters& params,
                              bool expand);

std::string render_text(const CatalogDocument& doc);
std::string render_json(const CatalogDocument& doc);
// Inverse of render_json; throws ParseError on malformed input.
CatalogDocument parse_json(const std::string& text);
// One row per code: "h,class,nu2u,k,d,enumerator".
std::string render_csv(const CatalogDocument& doc);
// Long form with expansions: "h,weight,count".
std::string render_csv_expanded(const CatalogDocument& doc);

// Rendering of a verification run (the verify command).
std::string render_instance_report_text(const InstanceReport& rep);
std::string render_instance_report_json(const InstanceReport& rep);

}  // namespace cycloweight

#endif
