#include "core/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace projcoh {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump() + "\n"; }

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw io_error("malformed JSON");
    return j;
}

json table_to_json(const std::vector<int64_t>& flat, int64_t rows, int64_t cols) {
    json out = json::array();
    for (int64_t r = 0; r < rows; ++r) {
        json row = json::array();
        for (int64_t c = 0; c < cols; ++c) row.push_back(flat[static_cast<size_t>(r * cols + c)]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<int64_t>> json_to_table(const json& j) {
    if (!j.is_array()) throw io_error("expected an array of rows");
    std::vector<std::vector<int64_t>> out;
    for (const json& row : j) {
        if (!row.is_array()) throw io_error("expected an array of rows");
        std::vector<int64_t> r;
        for (const json& v : row) {
            if (!v.is_number_integer()) throw io_error("table entries must be integers");
            r.push_back(v.get<int64_t>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

int64_t get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw io_error(std::string("missing or non-integer field '") + key + "'");
    return j[key].get<int64_t>();
}

json group_to_json_obj(const FiniteGroup& g) {
    json j;
    j["order"] = g.order();
    j["table"] = table_to_json(g.flat_table(), g.order(), g.order());
    if (!g.names().empty()) j["names"] = g.names();
    return j;
}

FiniteGroup group_from_json_obj(const json& j) {
    int64_t order = get_int(j, "order");
    auto table = json_to_table(j.at("table"));
    if (static_cast<int64_t>(table.size()) != order)
        throw domain_error("group order field does not match table size");
    std::vector<std::string> names;
    if (j.contains("names")) {
        for (const json& n : j["names"]) names.push_back(n.get<std::string>());
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

json cocycle_to_json_obj(const Cochain2& w) {
    json j;
    j["group_order"] = w.group_order;
    j["modulus"] = w.modulus;
    j["table"] = table_to_json(w.values, w.group_order, w.group_order);
    return j;
}

Cochain2 cocycle_from_json_obj(const json& j) {
    Cochain2 w;
    w.group_order = get_int(j, "group_order");
    w.modulus = get_int(j, "modulus");
    if (w.group_order < 1 || w.modulus < 1)
        throw domain_error("cocycle group_order and modulus must be positive");
    auto table = json_to_table(j.at("table"));
    if (static_cast<int64_t>(table.size()) != w.group_order)
        throw domain_error("cocycle table does not match group_order");
    for (const auto& row : table) {
        if (static_cast<int64_t>(row.size()) != w.group_order)
            throw domain_error("cocycle table is not square");
        for (int64_t v : row) {
            if (v < 0 || v >= w.modulus)
                throw domain_error("cocycle entry not reduced mod " + std::to_string(w.modulus));
            w.values.push_back(v);
        }
    }
    return w;
}

} // namespace

std::string group_to_json(const FiniteGroup& g) { return dump(group_to_json_obj(g)); }

FiniteGroup group_from_json(const std::string& text) {
    return group_from_json_obj(parse_json(text));
}

std::string cocycle_to_json(const Cochain2& w) { return dump(cocycle_to_json_obj(w)); }

Cochain2 cocycle_from_json(const std::string& text) {
    return cocycle_from_json_obj(parse_json(text));
}

std::string cochain1_to_json(const Cochain1& f) {
    json j;
    j["group_order"] = f.group_order;
    j["modulus"] = f.modulus;
    j["values"] = f.values;
    return dump(j);
}

Cochain1 cochain1_from_json(const std::string& text) {
    json j = parse_json(text);
    Cochain1 f;
    f.group_order = get_int(j, "group_order");
    f.modulus = get_int(j, "modulus");
    if (f.group_order < 1 || f.modulus < 1)
        throw domain_error("cochain group_order and modulus must be positive");
    for (const json& v : j.at("values")) f.values.push_back(v.get<int64_t>());
    if (static_cast<int64_t>(f.values.size()) != f.group_order)
        throw domain_error("cochain values length does not match group_order");
    for (int64_t v : f.values)
        if (v < 0 || v >= f.modulus)
            throw domain_error("cochain entry not reduced mod " + std::to_string(f.modulus));
    return f;
}

std::string presentation_to_json(const FinAbPresentation& p) {
    json j;
    j["coefficient_modulus"] = p.modulus;
    j["invariant_factors"] = p.invariant_factors;
    json gens = json::array();
    for (const Cochain2& g : p.generators)
        gens.push_back(table_to_json(g.values, g.group_order, g.group_order));
    j["generators"] = std::move(gens);
    return dump(j);
}

FinAbPresentation presentation_from_json(const std::string& text) {
    json j = parse_json(text);
    FinAbPresentation p;
    p.modulus = get_int(j, "coefficient_modulus");
    for (const json& v : j.at("invariant_factors")) p.invariant_factors.push_back(v.get<int64_t>());
    for (const json& gj : j.at("generators")) {
        auto table = json_to_table(gj);
        Cochain2 w;
        w.group_order = static_cast<int64_t>(table.size());
        w.modulus = p.modulus;
        for (const auto& row : table) {
            if (row.size() != table.size())
                throw domain_error("presentation generator table is not square");
            for (int64_t v : row) w.values.push_back(v);
        }
        p.generators.push_back(std::move(w));
        p.group_order = p.generators.back().group_order;
    }
    if (p.generators.size() != p.invariant_factors.size())
        throw domain_error("presentation generator count does not match invariant factors");
    return p;
}

std::string rep_to_json(const FiniteGroup& g, const ProjectiveRep& r) {
    json j;
    j["group_order"] = r.group_order;
    j["dimension"] = r.dimension;
    j["phase_modulus"] = r.phase_modulus;
    json ops = json::array();
    for (const MonomialOperator& op : r.ops) {
        json o;
        o["perm"] = op.perm;
        o["phase"] = op.phase;
        ops.push_back(std::move(o));
    }
    j["ops"] = std::move(ops);
    j["group"] = group_to_json_obj(g);
    j["claimed_cocycle"] = cocycle_to_json_obj(r.claimed_cocycle);
    return dump(j);
}

std::pair<FiniteGroup, ProjectiveRep> rep_from_json(const std::string& text) {
    json j = parse_json(text);
    FiniteGroup g = group_from_json_obj(j.at("group"));
    ProjectiveRep r;
    r.group_order = get_int(j, "group_order");
    r.dimension = get_int(j, "dimension");
    r.phase_modulus = get_int(j, "phase_modulus");
    for (const json& oj : j.at("ops")) {
        MonomialOperator op;
        op.dimension = r.dimension;
        op.phase_modulus = r.phase_modulus;
        for (const json& v : oj.at("perm")) op.perm.push_back(v.get<uint32_t>());
        for (const json& v : oj.at("phase")) op.phase.push_back(v.get<int64_t>());
        r.ops.push_back(std::move(op));
    }
    r.claimed_cocycle = cocycle_from_json_obj(j.at("claimed_cocycle"));
    check_rep(g, r);
    return {std::move(g), std::move(r)};
}

std::string extension_to_json(const CentralExtension& e) {
    json j;
    j["base"] = group_to_json_obj(e.base);
    j["fiber_order"] = e.fiber_order;
    j["total"] = group_to_json_obj(e.total);
    j["inject"] = e.inject.map;
    j["project"] = e.project.map;
    j["cocycle"] = cocycle_to_json_obj(e.reduced_cocycle);
    return dump(j);
}

CentralExtension extension_from_json(const std::string& text) {
    json j = parse_json(text);
    CentralExtension e;
    e.base = group_from_json_obj(j.at("base"));
    e.fiber_order = get_int(j, "fiber_order");
    e.total = group_from_json_obj(j.at("total"));
    e.reduced_cocycle = cocycle_from_json_obj(j.at("cocycle"));
    if (e.fiber_order < 1) throw domain_error("fiber order must be positive");
    std::vector<int64_t> inj, prj;
    for (const json& v : j.at("inject")) inj.push_back(v.get<int64_t>());
    for (const json& v : j.at("project")) prj.push_back(v.get<int64_t>());
    e.inject = GroupHom::checked(cyclic_group(e.fiber_order), e.total, std::move(inj));
    e.project = GroupHom::checked(e.total, e.base, std::move(prj));
    return e;
}

std::string rep_to_dense_text(const ProjectiveRep& r) {
    if (r.dimension > 64)
        throw domain_error("dense export is limited to dimension <= 64");
    std::ostringstream out;
    out << "dimension " << r.dimension << " phase_modulus " << r.phase_modulus << "\n";
    for (size_t g = 0; g < r.ops.size(); ++g) {
        const MonomialOperator& op = r.ops[g];
        out << "# element " << g << "\n";
        for (int64_t row = 0; row < r.dimension; ++row) {
            for (int64_t col = 0; col < r.dimension; ++col) {
                if (col) out << ' ';
                // entry (row, col) = <e_row, T e_col>
                if (op.perm[static_cast<size_t>(col)] == row)
                    out << op.phase[static_cast<size_t>(col)] << '/' << r.phase_modulus;
                else
                    out << '0';
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot write file '" + tmp.string() + "'");
        out << content;
        if (!out.good()) throw io_error("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw io_error("atomic rename failed for '" + path + "': " + ec.message());
}

} // namespace projcoh
