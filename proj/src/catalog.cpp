#include "cycloweight/catalog.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <json.hpp>

#include "cycloweight/errors.hpp"

namespace cycloweight {

namespace {

std::string group_header(std::uint32_t q, std::uint32_t n, std::uint32_t k,
                         std::uint32_t d) {
    return "[" + std::to_string(q) + ";" + std::to_string(n) + "," +
           std::to_string(k) + "," + std::to_string(d) + "]";
}

std::string group_label(const CatalogGroup& g) {
    std::string label = g.header;
    label += g.kind == FactorKind::binomial ? " binomial" : " trinomial";
    if (g.nu2u) label += " nu2(u)=" + std::to_string(*g.nu2u);
    return label;
}

std::string case_name(CaseTag tag) {
    return tag == CaseTag::mixed ? "mixed" : "binomial-only";
}

}  // namespace

CatalogDocument build_catalog(const FieldTower& tower, const CaseParameters& params,
                              bool expand) {
    CatalogDocument doc;
    doc.q = params.q;
    doc.n = params.n;
    doc.params = params;

    auto factors = factor_xn_minus_1(params, tower);

    // group key: binomials first, then dimension, then nu2(u) descending
    // (distance rises as nu2(u) falls, so distance ascending is implied)
    std::map<std::tuple<int, std::uint32_t, std::int64_t, std::uint32_t>, CatalogGroup>
        groups;
    for (const auto& f : factors) {
        CodeRecord rec = build_code_record(tower, f, params);
        int kind_rank = f.kind == FactorKind::binomial ? 0 : 1;
        std::int64_t nu_rank = f.nu2u && f.kind == FactorKind::trinomial
                                   ? -static_cast<std::int64_t>(*f.nu2u)
                                   : 0;
        auto key = std::make_tuple(kind_rank, rec.k, nu_rank, rec.d);
        auto [it, inserted] = groups.try_emplace(key);
        CatalogGroup& g = it->second;
        if (inserted) {
            g.header = group_header(rec.q, rec.n, rec.k, rec.d);
            g.k = rec.k;
            g.d = rec.d;
            g.kind = f.kind;
            if (f.kind == FactorKind::trinomial) g.nu2u = f.nu2u;
        }
        CatalogRow row;
        row.h = render_poly(rec.check_poly);
        row.enumerator = rec.enumerator.render();
        if (expand) {
            auto dist = rec.enumerator.expanded();
            std::vector<std::pair<std::uint32_t, std::string>> flat;
            flat.reserve(dist->size());
            for (const auto& [w, c] : *dist) flat.emplace_back(w, c.to_decimal());
            row.expanded = std::move(flat);
        }
        g.rows.push_back(std::move(row));
    }

    for (auto& [key, g] : groups) {
        doc.groups.push_back(std::move(g));
        doc.summary.emplace_back(group_label(doc.groups.back()),
                                 doc.groups.back().rows.size());
    }
    return doc;
}

std::string render_text(const CatalogDocument& doc) {
    std::string out;
    out += "cycloweight catalog\n";
    out += "q=" + std::to_string(doc.q) + " n=" + std::to_string(doc.n) + "\n";
    out += "case: " + case_name(doc.params.tag) + "\n";
    if (doc.params.tag == CaseTag::mixed) {
        out += "parameters: m'=" + std::to_string(doc.params.m_prime) +
               " l=" + std::to_string(doc.params.l) +
               " l'=" + std::to_string(doc.params.l_prime) +
               " r=" + std::to_string(doc.params.r) + "\n";
    } else {
        out += "parameters: m=" + std::to_string(doc.params.m) +
               " l=" + std::to_string(doc.params.l) + "\n";
    }
    std::size_t codes = 0;
    for (const auto& g : doc.groups) codes += g.rows.size();
    out += "codes: " + std::to_string(codes) + "\n";
    for (const auto& g : doc.groups) {
        out += "\n" + group_label(g) + " (" + std::to_string(g.rows.size()) +
               (g.rows.size() == 1 ? " code)\n" : " codes)\n");
        if (!g.rows.empty())
            out += "  weight enumerator: " + g.rows.front().enumerator + "\n";
        for (const auto& row : g.rows) {
            out += "  h(x) = " + row.h + "\n";
            if (row.expanded) {
                out += "    expanded:";
                for (const auto& [w, c] : *row.expanded)
                    out += " " + std::to_string(w) + ":" + c;
                out += "\n";
            }
        }
    }
    return out;
}

std::string render_json(const CatalogDocument& doc) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["q"] = doc.q;
    j["n"] = doc.n;
    j["case"] = case_name(doc.params.tag);
    nlohmann::json params;
    if (doc.params.tag == CaseTag::mixed) {
        params["m_prime"] = doc.params.m_prime;
        params["l"] = doc.params.l;
        params["l_prime"] = doc.params.l_prime;
        params["r"] = doc.params.r;
    } else {
        params["m"] = doc.params.m;
        params["l"] = doc.params.l;
    }
    j["parameters"] = params;
    j["groups"] = nlohmann::json::array();
    for (const auto& g : doc.groups) {
        nlohmann::json jg;
        jg["header"] = g.header;
        jg["k"] = g.k;
        jg["d"] = g.d;
        jg["class"] = g.kind == FactorKind::binomial ? "binomial" : "trinomial";
        if (g.nu2u) jg["nu2u"] = *g.nu2u;
        jg["rows"] = nlohmann::json::array();
        for (const auto& row : g.rows) {
            nlohmann::json jr;
            jr["h"] = row.h;
            jr["enumerator"] = row.enumerator;
            if (row.expanded) {
                nlohmann::json je = nlohmann::json::array();
                for (const auto& [w, c] : *row.expanded)
                    je.push_back(nlohmann::json::array({w, c}));
                jr["expanded"] = je;
            }
            jg["rows"].push_back(jr);
        }
        j["groups"].push_back(jg);
    }
    j["summary"] = nlohmann::json::array();
    for (const auto& [label, count] : doc.summary)
        j["summary"].push_back({{"group", label}, {"count", count}});
    return j.dump(2) + "\n";
}

CatalogDocument parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad catalog JSON: ") + e.what());
    }
    try {
        if (j.at("schema").get<std::string>() != kJsonSchema)
            throw ParseError("unsupported schema");
        CatalogDocument doc;
        doc.q = j.at("q").get<std::uint32_t>();
        doc.n = j.at("n").get<std::uint32_t>();
        doc.params = case_parameters(doc.n, doc.q);
        for (const auto& jg : j.at("groups")) {
            CatalogGroup g;
            g.header = jg.at("header").get<std::string>();
            g.k = jg.at("k").get<std::uint32_t>();
            g.d = jg.at("d").get<std::uint32_t>();
            g.kind = jg.at("class").get<std::string>() == "binomial"
                         ? FactorKind::binomial
                         : FactorKind::trinomial;
            if (jg.contains("nu2u")) g.nu2u = jg.at("nu2u").get<std::uint32_t>();
            for (const auto& jr : jg.at("rows")) {
                CatalogRow row;
                row.h = jr.at("h").get<std::string>();
                row.enumerator = jr.at("enumerator").get<std::string>();
                if (jr.contains("expanded")) {
                    std::vector<std::pair<std::uint32_t, std::string>> flat;
                    for (const auto& je : jr.at("expanded"))
                        flat.emplace_back(je.at(0).get<std::uint32_t>(),
                                          je.at(1).get<std::string>());
                    row.expanded = std::move(flat);
                }
                g.rows.push_back(std::move(row));
            }
            doc.groups.push_back(std::move(g));
        }
        for (const auto& js : j.at("summary"))
            doc.summary.emplace_back(js.at("group").get<std::string>(),
                                     js.at("count").get<std::uint64_t>());
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad catalog JSON: ") + e.what());
    }
}

std::string render_csv(const CatalogDocument& doc) {
    std::string out = "h,class,nu2u,k,d,enumerator\n";
    for (const auto& g : doc.groups)
        for (const auto& row : g.rows) {
            out += row.h;
            out += g.kind == FactorKind::binomial ? ",binomial," : ",trinomial,";
            out += g.nu2u ? std::to_string(*g.nu2u) : "";
            out += "," + std::to_string(g.k) + "," + std::to_string(g.d) + "," +
                   row.enumerator + "\n";
        }
    return out;
}

std::string render_csv_expanded(const CatalogDocument& doc) {
    std::string out = "h,weight,count\n";
    for (const auto& g : doc.groups)
        for (const auto& row : g.rows) {
            if (!row.expanded)
                throw InvalidArgumentError("catalog was built without expansions");
            for (const auto& [w, c] : *row.expanded)
                out += row.h + "," + std::to_string(w) + "," + c + "\n";
        }
    return out;
}

namespace {

void append_checks(std::string& out, const std::vector<CheckEntry>& checks,
                   const std::vector<SkipEntry>& skipped) {
    for (const auto& c : checks) {
        out += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.name +
               ": predicted " + c.predicted + ", measured " + c.measured + "\n";
    }
    for (const auto& s : skipped)
        out += "  [skip] " + s.name + ": " + s.reason + "\n";
}

}  // namespace

std::string render_instance_report_text(const InstanceReport& rep) {
    std::string out;
    out += "cycloweight verify\n";
    out += "q=" + std::to_string(rep.params.q) + " n=" + std::to_string(rep.params.n) +
           " case: " + case_name(rep.params.tag) + "\n";
    out += "instance checks:\n";
    append_checks(out, rep.checks, rep.skipped);
    if (!rep.count_audit.empty()) {
        out += "count audit (per-nu2(u) label formula vs measured factors):\n";
        for (const auto& a : rep.count_audit)
            out += "  [" + std::string(a.agrees ? "agrees" : "flagged") + "] " + a.name +
                   ": formula " + std::to_string(a.predicted) + ", measured " +
                   std::to_string(a.measured) + "\n";
    }
    out += "codes:\n";
    std::size_t failed = 0, skipped = 0, checks = 0;
    for (const auto& code : rep.codes) {
        out += " h(x) = " + code.code_id + "\n";
        append_checks(out, code.checks, code.skipped);
        checks += code.checks.size();
        skipped += code.skipped.size();
        for (const auto& c : code.checks)
            if (!c.pass) ++failed;
    }
    for (const auto& c : rep.checks)
        if (!c.pass) ++failed;
    checks += rep.checks.size();
    skipped += rep.skipped.size();
    out += "result: " + std::string(rep.all_passed() ? "PASS" : "FAIL") + " (" +
           std::to_string(checks) + " checks, " + std::to_string(failed) +
           " failed, " + std::to_string(skipped) + " skipped)\n";
    return out;
}

std::string render_instance_report_json(const InstanceReport& rep) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["q"] = rep.params.q;
    j["n"] = rep.params.n;
    j["case"] = case_name(rep.params.tag);
    j["pass"] = rep.all_passed();
    auto checks_json = [](const std::vector<CheckEntry>& checks,
                          const std::vector<SkipEntry>& skipped) {
        nlohmann::json out;
        out["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            out["checks"].push_back({{"name", c.name},
                                     {"predicted", c.predicted},
                                     {"measured", c.measured},
                                     {"pass", c.pass}});
        out["skipped"] = nlohmann::json::array();
        for (const auto& s : skipped)
            out["skipped"].push_back({{"name", s.name}, {"reason", s.reason}});
        return out;
    };
    j["instance"] = checks_json(rep.checks, rep.skipped);
    j["count_audit"] = nlohmann::json::array();
    for (const auto& a : rep.count_audit)
        j["count_audit"].push_back({{"name", a.name},
                                    {"formula", a.predicted},
                                    {"measured", a.measured},
                                    {"agrees", a.agrees}});
    j["codes"] = nlohmann::json::array();
    for (const auto& code : rep.codes) {
        nlohmann::json jc = checks_json(code.checks, code.skipped);
        jc["h"] = code.code_id;
        jc["pass"] = code.all_passed();
        j["codes"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

}  // namespace cycloweight
