#include "nf/spec_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nf/errors.hpp"

namespace nf {

using nlohmann::json;

namespace {

mpz_class to_mpz(const json& v, const char* what) {
    if (v.is_number_integer()) return mpz_class((long)v.get<long long>());
    if (v.is_string()) {
        mpz_class z;
        if (z.set_str(v.get<std::string>(), 10) != 0)
            throw spec_error(std::string(what) + ": bad integer literal");
        return z;
    }
    throw spec_error(std::string(what) + ": expected an integer");
}

} // namespace

FieldSpec parse_field_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw spec_error(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw spec_error("spec must be a JSON object");

    FieldSpec s;
    if (!j.contains("poly") || !j["poly"].is_array() || j["poly"].size() < 3)
        throw spec_error("spec needs a \"poly\" array of degree >= 2");
    std::vector<mpz_class> c;
    for (const auto& v : j["poly"]) c.push_back(to_mpz(v, "poly"));
    s.f = IntPoly(std::move(c));

    if (j.contains("basis")) {
        if (!j["basis"].is_array()) throw spec_error("\"basis\" must be an array of rows");
        for (const auto& row : j["basis"]) {
            if (!row.is_array()) throw spec_error("\"basis\" rows must be arrays");
            std::vector<mpq_class> r;
            for (const auto& ent : row) {
                if (!ent.is_array() || ent.size() != 2)
                    throw spec_error("\"basis\" entries must be [num, den] pairs");
                mpz_class num = to_mpz(ent[0], "basis");
                mpz_class den = to_mpz(ent[1], "basis");
                if (den == 0) throw spec_error("\"basis\" entry has zero denominator");
                mpq_class q(num, den);
                q.canonicalize();
                r.push_back(q);
            }
            s.basis.push_back(std::move(r));
        }
    }

    if (j.contains("class_number")) {
        if (!j["class_number"].is_number_integer() || j["class_number"].get<long long>() <= 0)
            throw spec_error("\"class_number\" must be a positive integer");
        s.class_number = j["class_number"].get<long long>();
    }

    if (j.contains("group")) {
        if (!j["group"].is_array()) throw spec_error("\"group\" must be an array of permutations");
        std::vector<Perm> gens;
        for (const auto& gj : j["group"]) {
            if (!gj.is_array()) throw spec_error("\"group\" entries must be arrays");
            Perm g;
            for (const auto& v : gj) {
                if (!v.is_number_integer()) throw spec_error("\"group\" images must be integers");
                long long img = v.get<long long>(); // 1-indexed on disk
                if (img < 1 || img > (long long)gj.size())
                    throw spec_error("\"group\" permutation image out of range");
                g.push_back((int)img - 1);
            }
            gens.push_back(std::move(g));
        }
        s.group = std::move(gens);
    }

    if (j.contains("label")) {
        if (!j["label"].is_string()) throw spec_error("\"label\" must be a string");
        s.label = j["label"].get<std::string>();
    }
    return s;
}

FieldSpec load_field_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    FieldSpec s = parse_field_spec(ss.str());
    if (s.label.empty())
        s.label = std::filesystem::path(path).stem().string();
    return s;
}

std::string resolve_spec_path(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg) && fs::is_regular_file(arg)) return arg;

    std::vector<std::string> dirs;
    if (const char* env = std::getenv("NFLAB_SPEC_DIR")) dirs.push_back(env);
#ifdef NF_SPEC_DIR
    dirs.push_back(NF_SPEC_DIR);
#endif
    for (const auto& dir : dirs) {
        for (const std::string& name : {arg, arg + ".json"}) {
            fs::path p = fs::path(dir) / name;
            if (fs::exists(p) && fs::is_regular_file(p)) return p.string();
        }
    }
    throw usage_error("spec not found: " + arg);
}

} // namespace nf
