#include "lgdiv.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lgdiv/report.hpp"

struct lgdiv_group {
    lgdiv::GroupPtr g;
};

namespace {

thread_local std::string t_last_error;

lgdiv_status map_error(const lgdiv::Error& e) {
    t_last_error = e.what();
    switch (e.code()) {
    case lgdiv::errc::cap_exceeded:
    case lgdiv::errc::budget_exceeded: return LGDIV_ERR_CAP;
    case lgdiv::errc::internal: return LGDIV_ERR_INTERNAL;
    default: return LGDIV_ERR_INVALID;
    }
}

template <typename F>
lgdiv_status guarded(F&& f) {
    try {
        f();
        return LGDIV_OK;
    } catch (const lgdiv::Error& e) {
        return map_error(e);
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return LGDIV_ERR_NOMEM;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return LGDIV_ERR_INVALID;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nlohmann::json parse(const char* s, const char* what) {
    if (!s) lgdiv::fail(lgdiv::errc::invalid_argument, std::string(what) + " is null");
    return nlohmann::json::parse(s);
}

lgdiv::CohomologyBackend backend_of(uint32_t flags) {
    return (flags & LGDIV_BACKEND_ENUMERATION) ? lgdiv::CohomologyBackend::enumeration
                                               : lgdiv::CohomologyBackend::generator_values;
}

void require(bool ok, const char* msg) {
    if (!ok) lgdiv::fail(lgdiv::errc::invalid_argument, msg);
}

} // namespace

extern "C" {

const char* lgdiv_last_error(void) { return t_last_error.c_str(); }

void lgdiv_string_free(char* s) { std::free(s); }

lgdiv_status lgdiv_group_from_json(const char* json, uint64_t cap, lgdiv_group** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto g = lgdiv::group_from_json(parse(json, "group json"), cap);
        *out = new lgdiv_group{std::move(g)};
    });
}

lgdiv_status lgdiv_group_from_family(const char* spec_json, uint64_t cap, lgdiv_group** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto spec = lgdiv::family_spec_from_json(parse(spec_json, "family spec"));
        *out = new lgdiv_group{lgdiv::build_family(spec, cap).group};
    });
}

void lgdiv_group_free(lgdiv_group* g) { delete g; }

lgdiv_status lgdiv_group_order(const lgdiv_group* g, uint64_t* out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = g->g->order();
    });
}

lgdiv_status lgdiv_analyze(const lgdiv_group* g, uint32_t flags, char** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = dup_string(lgdiv::analyze_report(g->g, backend_of(flags)).dump());
    });
}

lgdiv_status lgdiv_h1loc(const lgdiv_group* g, uint32_t flags, char** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = dup_string(lgdiv::h1loc_report(g->g, backend_of(flags)).dump());
    });
}

lgdiv_status lgdiv_isogeny(const lgdiv_group* g, char** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = dup_string(lgdiv::isogeny_json(*g->g, lgdiv::isogeny_report(*g->g)).dump());
    });
}

lgdiv_status lgdiv_family_certify(const char* spec_json, uint64_t cap, char** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto spec = lgdiv::family_spec_from_json(parse(spec_json, "family spec"));
        auto build = lgdiv::build_family(spec, cap);
        auto cert = lgdiv::verify_counterexample(build.group, build.witness);
        *out = dup_string(lgdiv::certificate_json(cert).dump());
    });
}

lgdiv_status lgdiv_grid(const char* config_json, char** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto config = lgdiv::grid_config_from_json(parse(config_json, "grid config"));
        *out = dup_string(lgdiv::grid_json(lgdiv::vanishing_grid(config)).dump());
    });
}

lgdiv_status lgdiv_search(const char* options_json, char** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto opt = lgdiv::search_options_from_json(parse(options_json, "search options"));
        *out = dup_string(lgdiv::search_json(lgdiv::search_counterexamples(opt)).dump());
    });
}

} // extern "C"
