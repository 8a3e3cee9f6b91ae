#include "pib4/report.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace pib4 {

namespace {

using json = nlohmann::ordered_json;

std::string str(const BigInt& v) { return v.get_str(); }

json triple_json(const ElementTriple& e) { return json::array({str(e.c1), str(e.c2), str(e.c3)}); }

json pair_list(const std::vector<std::pair<BigInt, BigInt>>& ps) {
    json arr = json::array();
    for (const auto& [p, q] : ps) arr.push_back(json::array({str(p), str(q)}));
    return arr;
}

json form_json(const BinaryForm& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(str(c));
    return arr;
}

json solutions_json(const ThueSolutionSet& s) {
    json out;
    out["pairs"] = pair_list(s.solutions);
    if (s.completeness == Completeness::Exact)
        out["completeness"] = "exact";
    else
        out["completeness"] = json{{"bounded_search", s.bound}};
    return out;
}

}  // namespace

std::string report_to_json(const SweepReport& rep) {
    json root;
    root["family"] = family_name(rep.family);
    root["range"] = json{{"t_min", str(rep.t_min)}, {"t_max", str(rep.t_max)}};
    root["bound"] = rep.bound;
    root["tool_version"] = rep.tool_version;
    json records = json::array();
    for (const TRecord& r : rep.records) {
        json rec;
        rec["t"] = str(r.t);
        rec["monogenic"] = r.monogenic;
        json wit = json::array();
        for (const auto& [value, sf] : r.witnesses)
            wit.push_back(json{{"value", str(value)}, {"squarefree", sf}});
        rec["witnesses"] = wit;
        rec["processed"] = r.processed;
        if (r.processed) {
            rec["cubic_solutions"] = solutions_json(*r.cubic);
            json branches = json::array();
            for (const BranchRecord& br : r.branches) {
                json b;
                b["u"] = str(br.u);
                b["v"] = str(br.v);
                if (br.family_route) {
                    b["route"] = "family_substitution";
                    b["quartic_form_ab"] = form_json(*br.ab_form);
                    b["solutions_ab"] = solutions_json(*br.ab_solutions);
                } else {
                    b["route"] = "generic";
                    if (br.insoluble_modulus)
                        b["conic_insoluble_mod"] = *br.insoluble_modulus;
                    if (br.zero)
                        b["conic_point"] = json::array(
                            {str((*br.zero)[0]), str((*br.zero)[1]), str((*br.zero)[2])});
                    if (br.f1) b["quartic_form_f1"] = form_json(*br.f1);
                    if (br.f2) b["quartic_form_f2"] = form_json(*br.f2);
                    b["solutions_pq"] = pair_list(br.pq_solutions);
                }
                json elems = json::array();
                for (const auto& e : br.elements) elems.push_back(triple_json(e));
                b["elements"] = elems;
                branches.push_back(std::move(b));
            }
            rec["branches"] = branches;
            json gens = json::array();
            for (const GeneratorRecord& g : r.generators) {
                json gj;
                gj["triple"] = triple_json(g.triple);
                gj["index_form_abs"] = str(g.index_form_abs);
                if (g.oracle_index) gj["oracle_index"] = str(*g.oracle_index);
                gj["oracle_confirmed"] = g.oracle_confirmed;
                gj["power_integral_basis"] = g.pib;
                gens.push_back(std::move(gj));
            }
            rec["generators"] = gens;
            json cat;
            cat["matched"] = r.catalog_match;
            json missing = json::array(), extra = json::array();
            for (const auto& e : r.catalog_missing) missing.push_back(triple_json(e));
            for (const auto& e : r.catalog_extra) extra.push_back(triple_json(e));
            cat["missing"] = missing;
            cat["extra"] = extra;
            json entries = json::array();
            for (const CatalogEntry& e : r.catalog) {
                json ej;
                ej["triple"] = triple_json(e.triple);
                ej["condition"] = e.condition;
                if (e.paper_variant) ej["paper_variant"] = triple_json(*e.paper_variant);
                entries.push_back(std::move(ej));
            }
            cat["entries"] = entries;
            rec["catalog_match"] = cat;
        }
        records.push_back(std::move(rec));
    }
    root["records"] = records;
    return root.dump(2) + "\n";
}

void write_report(const SweepReport& rep, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    out << report_to_json(rep);
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace pib4
