#include "bochvar/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bochvar {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error("not valid JSON");
    return j;
}

std::map<std::string, std::string> string_map(const json& j, const std::string& where) {
    if (!j.is_object()) throw error(where + ": expected an object of name->name entries");
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string()) throw error(where + "[" + k + "]: expected a string");
        out[k] = v.get<std::string>();
    }
    return out;
}

std::vector<std::vector<std::string>> string_table(const json& j, const std::string& where) {
    if (!j.is_array()) throw error(where + ": expected an array of rows");
    std::vector<std::vector<std::string>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw error(where + ": expected rows to be arrays");
        std::vector<std::string> r;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw error(where + ": table cells must be strings");
            r.push_back(cell.get<std::string>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

AlgebraData algebra_from_json(const json& j) {
    if (!j.is_object()) throw error("algebra: expected a JSON object");
    AlgebraData d;
    d.name = j.value("name", "");
    if (!j.contains("elements") || !j["elements"].is_array())
        throw error("algebra: missing 'elements' list");
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw error("algebra: element names must be strings");
        d.elements.push_back(e.get<std::string>());
    }
    if (!j.contains("ops") || !j["ops"].is_object()) throw error("algebra: missing 'ops' object");
    const json& ops = j["ops"];
    for (const char* key : {"zero", "one", "not", "and", "or"})
        if (!ops.contains(key)) throw error(std::string("algebra: ops missing '") + key + "'");
    d.zero = ops["zero"].get<std::string>();
    d.one = ops["one"].get<std::string>();
    d.not_table = string_map(ops["not"], "not");
    if (ops.contains("j2")) d.j2_table = string_map(ops["j2"], "j2");
    d.and_table = string_table(ops["and"], "and");
    d.or_table = string_table(ops["or"], "or");
    return d;
}

json algebra_to_json_obj(const AlgebraData& d) {
    json ops;
    ops["zero"] = d.zero;
    ops["one"] = d.one;
    ops["not"] = d.not_table;
    if (d.j2_table) ops["j2"] = *d.j2_table;
    ops["and"] = d.and_table;
    ops["or"] = d.or_table;
    json j;
    j["name"] = d.name;
    j["elements"] = d.elements;
    j["ops"] = std::move(ops);
    return j;
}

}  // namespace

FileKind detect_file_kind(const std::string& text) {
    json j = parse(text);
    if (j.is_object() && j.contains("boolean")) return FileKind::bochvar_system;
    if (j.is_object() && j.contains("index")) return FileKind::direct_system;
    return FileKind::algebra;
}

AlgebraData parse_algebra_json(const std::string& text) { return algebra_from_json(parse(text)); }

std::string algebra_to_json(const FiniteAlgebra& a) {
    return algebra_to_json_obj(a.to_data()).dump(2) + "\n";
}

FiniteAlgebra load_algebra(const std::string& path) {
    AlgebraData d = parse_algebra_json(read_file(path));
    if (d.name.empty()) d.name = path;
    return FiniteAlgebra::from_data(d);
}

void save_algebra(const std::string& path, const FiniteAlgebra& a) {
    write_file(path, algebra_to_json(a));
}

BochvarSystem parse_system_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("boolean"))
        throw error("system: missing 'boolean'");
    if (!j.contains("subsemilattice") || !j["subsemilattice"].is_array())
        throw error("system: missing 'subsemilattice' list");

    BooleanAlgebra b = BooleanAlgebra::from_atoms({});
    std::vector<std::string> members;
    if (j["boolean"].is_object() && j["boolean"].contains("atoms")) {
        std::vector<std::string> atoms;
        for (const auto& a : j["boolean"]["atoms"]) atoms.push_back(a.get<std::string>());
        b = BooleanAlgebra::from_atoms(atoms);
        for (const auto& m : j["subsemilattice"]) members.push_back(m.get<std::string>());
    } else {
        // inline algebra: verify it is Boolean and re-atomise canonically
        FiniteAlgebra inline_algebra = FiniteAlgebra::from_data(algebra_from_json(j["boolean"]));
        BooleanConversion conv = boolean_from_algebra(inline_algebra);
        for (const auto& m : j["subsemilattice"]) {
            std::string name = m.get<std::string>();
            int original = name == "1" ? inline_algebra.one() : inline_algebra.index_of(name);
            members.push_back(conv.algebra.element_name(conv.mask_of[original]));
        }
        b = std::move(conv.algebra);
    }
    return make_bochvar_system(b, members);
}

std::string system_to_json(const BochvarSystem& s) {
    json j;
    j["boolean"] = {{"atoms", s.boolean.atoms()}};
    std::vector<std::string> members;
    for (int m : s.subsemilattice) members.push_back(s.boolean.element_name(m));
    j["subsemilattice"] = members;
    return j.dump(2) + "\n";
}

BochvarSystem load_system(const std::string& path) { return parse_system_json(read_file(path)); }

void save_system(const std::string& path, const BochvarSystem& s) {
    write_file(path, system_to_json(s));
}

SystemData parse_direct_system_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("index") || !j["index"].contains("elements"))
        throw error("direct system: missing 'index.elements'");
    SystemData d;
    for (const auto& e : j["index"]["elements"]) d.index_elements.push_back(e.get<std::string>());
    if (j["index"].contains("order"))
        for (const auto& pair : j["index"]["order"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw error("direct system: order entries must be [i,j] pairs");
            d.order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
    if (!j.contains("fibres") || !j["fibres"].is_object())
        throw error("direct system: missing 'fibres'");

    // disjointness: keep names as given when the fibre carriers are already
    // pairwise disjoint, otherwise prefix every element with its index
    std::map<std::string, AlgebraData> raw;
    for (const auto& [idx, fj] : j["fibres"].items()) raw[idx] = algebra_from_json(fj);
    bool collision = false;
    {
        std::set<std::string> seen;
        for (const auto& [idx, fd] : raw)
            for (const auto& e : fd.elements)
                if (!seen.insert(e).second) collision = true;
    }
    std::map<std::string, std::map<std::string, std::string>> renames;
    for (const auto& [idx, fd] : raw) {
        std::map<std::string, std::string> rename;
        for (const auto& e : fd.elements) rename[e] = collision ? idx + ":" + e : e;
        AlgebraData prefixed = fd;
        for (auto& e : prefixed.elements) e = rename[e];
        for (auto& row : prefixed.and_table)
            for (auto& c : row) c = rename.at(c);
        for (auto& row : prefixed.or_table)
            for (auto& c : row) c = rename.at(c);
        std::map<std::string, std::string> nt;
        for (auto& [k, v] : prefixed.not_table) nt[rename.at(k)] = rename.at(v);
        prefixed.not_table = std::move(nt);
        if (prefixed.j2_table) {
            std::map<std::string, std::string> jt;
            for (auto& [k, v] : *prefixed.j2_table) jt[rename.at(k)] = rename.at(v);
            prefixed.j2_table = std::move(jt);
        }
        prefixed.zero = rename.at(prefixed.zero);
        prefixed.one = rename.at(prefixed.one);
        d.fibres[idx] = std::move(prefixed);
        renames[idx] = std::move(rename);
    }
    if (j.contains("homs"))
        for (const auto& [key, hj] : j["homs"].items()) {
            auto arrow = key.find("->");
            if (arrow == std::string::npos)
                throw error("direct system: hom key '" + key + "' is not of the form i->j");
            std::string from = key.substr(0, arrow), to = key.substr(arrow + 2);
            if (!renames.count(from) || !renames.count(to))
                throw error("direct system: hom key '" + key + "' names unknown fibres");
            std::map<std::string, std::string> m;
            for (const auto& [k, v] : string_map(hj, "hom " + key)) {
                if (!renames[from].count(k))
                    throw error("hom " + key + ": '" + k + "' is not in the source fibre");
                if (!renames[to].count(v))
                    throw error("hom " + key + ": '" + v + "' is not in the target fibre");
                m[renames[from][k]] = renames[to][v];
            }
            d.homs[{from, to}] = std::move(m);
        }
    return d;
}

std::string direct_system_to_json(const SemilatticeDirectSystem& s) {
    SystemData d = s.to_data();
    json j;
    j["index"] = {{"elements", d.index_elements}};
    std::vector<std::vector<std::string>> order;
    for (const auto& [a, b] : d.order) order.push_back({a, b});
    j["index"]["order"] = order;
    json fibres;
    for (const auto& [idx, fd] : d.fibres) fibres[idx] = algebra_to_json_obj(fd);
    j["fibres"] = std::move(fibres);
    json homs;
    for (const auto& [key, m] : d.homs) homs[key.first + "->" + key.second] = m;
    j["homs"] = std::move(homs);
    return j.dump(2) + "\n";
}

SemilatticeDirectSystem load_direct_system(const std::string& path) {
    SystemData d = parse_direct_system_json(read_file(path));
    return SemilatticeDirectSystem::from_data(d);
}

void save_direct_system(const std::string& path, const SemilatticeDirectSystem& s) {
    write_file(path, direct_system_to_json(s));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path + "'");
    out << content;
}

}  // namespace bochvar
