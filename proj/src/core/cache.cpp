#include "core/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include <json.hpp>

#include "core/json_io.hpp"
#include "core/smith.hpp"

namespace projcoh {

using nlohmann::json;

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw internal_error("sha256 failed");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

namespace {

std::string cache_key(const FiniteGroup& g, int64_t m, const std::string& kind) {
    std::ostringstream ss;
    ss << "kind=" << kind << ";order=" << g.order() << ";m=" << m << ";table=";
    for (int64_t v : g.flat_table()) ss << v << ',';
    return sha256_hex(ss.str());
}

json mat_to_json(const IntMat& m) {
    json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["data"] = m.a;
    return j;
}

IntMat mat_from_json(const json& j) {
    IntMat m(j.at("rows").get<int64_t>(), j.at("cols").get<int64_t>());
    std::vector<int64_t> data = j.at("data").get<std::vector<int64_t>>();
    if (data.size() != m.a.size()) throw io_error("cache matrix shape mismatch");
    m.a = std::move(data);
    return m;
}

std::string payload_for(const FinAbPresentation& p, const std::string& kind) {
    json j;
    j["kind"] = kind;
    j["group_order"] = p.group_order;
    j["coefficient_modulus"] = p.modulus;
    j["invariant_factors"] = p.invariant_factors;
    json gens = json::array();
    for (const Cochain2& g : p.generators) gens.push_back(g.values);
    j["generators"] = std::move(gens);
    const ZmSolveData& sd = *p.solve;
    json solve;
    solve["v_inv"] = mat_to_json(sd.v_inv);
    solve["tvec"] = sd.tvec;
    solve["u2"] = mat_to_json(sd.u2);
    solve["dvec"] = sd.dvec;
    solve["kept"] = sd.kept;
    j["solve"] = std::move(solve);
    return j.dump() + "\n";
}

FinAbPresentation presentation_from_payload(const std::string& payload,
                                            const std::string& kind) {
    json j = json::parse(payload, nullptr, false);
    if (j.is_discarded()) throw io_error("cache payload is not valid JSON");
    if (j.at("kind").get<std::string>() != kind) throw io_error("cache kind mismatch");
    FinAbPresentation p;
    p.group_order = j.at("group_order").get<int64_t>();
    p.modulus = j.at("coefficient_modulus").get<int64_t>();
    p.invariant_factors = j.at("invariant_factors").get<std::vector<int64_t>>();
    for (const json& gv : j.at("generators")) {
        Cochain2 w;
        w.group_order = p.group_order;
        w.modulus = p.modulus;
        w.values = gv.get<std::vector<int64_t>>();
        if (w.values.size() != static_cast<size_t>(p.group_order * p.group_order))
            throw io_error("cache generator shape mismatch");
        p.generators.push_back(std::move(w));
    }
    const json& solve = j.at("solve");
    ZmSolveData sd;
    sd.v_inv = mat_from_json(solve.at("v_inv"));
    sd.tvec = solve.at("tvec").get<std::vector<int64_t>>();
    sd.u2 = mat_from_json(solve.at("u2"));
    sd.dvec = solve.at("dvec").get<std::vector<int64_t>>();
    sd.kept = solve.at("kept").get<std::vector<int64_t>>();
    p.solve = std::move(sd);
    return p;
}

// Re-verification of a loaded entry: shapes, generators are cocycles, and
// each generator coordinates to its own basis vector through the solve data.
void verify_loaded(const FiniteGroup& g, int64_t m, const FinAbPresentation& p) {
    if (p.group_order != g.order() || p.modulus != m)
        throw io_error("cache entry does not match the requested computation");
    if (p.generators.size() != p.invariant_factors.size())
        throw io_error("cache entry generator count mismatch");
    for (int64_t d : p.invariant_factors)
        if (d <= 1) throw io_error("cache entry has invalid invariant factor");
    for (size_t i = 0; i < p.generators.size(); ++i) {
        if (!is_cocycle(g, p.generators[i]))
            throw io_error("cache entry generator is not a cocycle");
        CohomClass c = class_coordinates(g, p.generators[i], p);
        for (size_t k = 0; k < c.coords.size(); ++k)
            if (c.coords[k] != (i == k ? 1 : 0))
                throw io_error("cache entry solve data fails the generator round-trip");
    }
}

FinAbPresentation cached_compute(const FiniteGroup& g, int64_t m, const std::string& kind,
                                 const std::string& cache_dir,
                                 FinAbPresentation (*compute)(const FiniteGroup&, int64_t)) {
    if (cache_dir.empty()) return compute(g, m);
    namespace fs = std::filesystem;
    const std::string key = cache_key(g, m, kind);
    const fs::path file = fs::path(cache_dir) / (key + ".json");

    if (fs::exists(file)) {
        try {
            std::string content = read_file(file.string());
            size_t nl = content.find('\n');
            if (nl == std::string::npos) throw io_error("cache entry truncated");
            std::string stored_hash = content.substr(0, nl);
            std::string payload = content.substr(nl + 1);
            if (stored_hash != sha256_hex(payload))
                throw io_error("cache entry failed integrity check");
            FinAbPresentation p = presentation_from_payload(payload, kind);
            verify_loaded(g, m, p);
            return p;
        } catch (const error&) {
            // fall through to recomputation; the entry is rewritten below
        }
    }

    FinAbPresentation p = compute(g, m);
    std::string payload = payload_for(p, kind);
    write_file_atomic(file.string(), sha256_hex(payload) + "\n" + payload);
    return p;
}

} // namespace

FinAbPresentation h2_zm_cached(const FiniteGroup& g, int64_t m,
                               const std::string& cache_dir) {
    return cached_compute(g, m, "h2zm", cache_dir,
                          [](const FiniteGroup& gg, int64_t mm) { return h2_zm(gg, mm); });
}

FinAbPresentation schur_multiplier_cached(const FiniteGroup& g,
                                          const std::string& cache_dir) {
    return cached_compute(
        g, g.order(), "schur", cache_dir,
        [](const FiniteGroup& gg, int64_t mm) { return schur_multiplier(gg, mm); });
}

} // namespace projcoh
