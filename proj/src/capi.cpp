#include "partfreq/partfreq.h"

#include <algorithm>
#include <cctype>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "partfreq/ady.hpp"
#include "partfreq/identities.hpp"
#include "partfreq/partition.hpp"
#include "partfreq/pfm.hpp"
#include "partfreq/qproduct.hpp"
#include "partfreq/series.hpp"

using json = nlohmann::ordered_json;

struct pf_partition {
    partfreq::Partition value;
    std::string text;
};

struct pf_partition_list {
    std::vector<pf_partition> items;
};

struct pf_orbit_table {
    partfreq::OrbitTable table;
};

struct pf_series {
    partfreq::Series series;
    std::vector<std::string> decimals;
};

struct pf_report {
    bool pass = false;
    std::string json_text;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_count_buffer;

/// Malformed text input (as opposed to a structurally bad argument).
struct TextError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

pf_status set_error(pf_status status, const char* message) {
    g_last_error = message ? message : "";
    return status;
}

template <typename Fn>
pf_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PF_OK;
    } catch (const TextError& e) {
        return set_error(PF_ERROR_PARSE, e.what());
    } catch (const json::exception& e) {
        return set_error(PF_ERROR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return set_error(PF_ERROR_PRECONDITION, e.what());
    } catch (const std::overflow_error& e) {
        return set_error(PF_ERROR_OVERFLOW, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(PF_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(PF_ERROR_INTERNAL, e.what());
    }
}

pf_partition* wrap(partfreq::Partition p) {
    auto* handle = new pf_partition;
    handle->text = p.str();
    handle->value = std::move(p);
    return handle;
}

/// Tokenizes "a,b,c"; syntax problems raise TextError, while invariant
/// violations surface later from the Partition constructor.
std::vector<std::uint64_t> tokenize_partition_text(const char* text) {
    std::vector<std::uint64_t> parts;
    std::string_view view(text);
    std::size_t pos = 0;
    while (pos < view.size()) {
        while (pos < view.size() && (view[pos] == ' ' || view[pos] == '\t')) ++pos;
        if (pos >= view.size()) break;
        if (!std::isdigit(static_cast<unsigned char>(view[pos]))) {
            throw TextError("partition literal: expected a nonnegative integer");
        }
        std::uint64_t value = 0;
        while (pos < view.size() && std::isdigit(static_cast<unsigned char>(view[pos]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(view[pos] - '0');
            if (value > (UINT64_MAX - digit) / 10) {
                throw TextError("partition literal: part too large");
            }
            value = value * 10 + digit;
            ++pos;
        }
        parts.push_back(value);
        while (pos < view.size() && (view[pos] == ' ' || view[pos] == '\t')) ++pos;
        if (pos < view.size()) {
            if (view[pos] != ',') {
                throw TextError("partition literal: expected ','");
            }
            ++pos;
            if (pos >= view.size()) {
                throw TextError("partition literal: trailing ','");
            }
        }
    }
    return parts;
}

partfreq::Partition parse_partition_text(const char* text, bool* reordered) {
    std::vector<std::uint64_t> parts = tokenize_partition_text(text);
    bool sorted = std::is_sorted(parts.begin(), parts.end(), std::greater<>());
    if (reordered) *reordered = !sorted;
    return sorted ? partfreq::Partition(std::move(parts))
                  : partfreq::Partition::from_unsorted(std::move(parts));
}

std::uint64_t required_u64(const json& params, const char* key) {
    if (!params.contains(key)) {
        throw std::invalid_argument(std::string("missing parameter \"") + key + '"');
    }
    const json& v = params.at(key);
    if (!v.is_number_unsigned()) {
        throw std::invalid_argument(std::string("parameter \"") + key +
                                    "\" must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

json cells_to_json(const partfreq::CheckResult::Cells& cells) {
    json out = json::object();
    for (const auto& [key, value] : cells) out[key] = value;
    return out;
}

json report_to_json(const partfreq::CheckResult& result) {
    json out;
    out["name"] = result.name;
    out["params"] = cells_to_json(result.params);
    out["pass"] = result.pass;
    out["witness"] = result.witness();
    json mismatches = json::array();
    for (const auto& m : result.mismatches) {
        mismatches.push_back(json{{"where", m.where}, {"lhs", m.lhs}, {"rhs", m.rhs}});
    }
    out["mismatches"] = mismatches;
    out["summary"] = cells_to_json(result.summary);
    json rows = json::array();
    for (const auto& row : result.rows) rows.push_back(cells_to_json(row));
    out["rows"] = rows;
    return out;
}

partfreq::CheckResult dispatch_check(const std::string& name, const json& params) {
    if (name == "pmm") {
        return partfreq::check_pmm(required_u64(params, "m"), required_u64(params, "order"));
    }
    if (name == "orbit1") {
        return partfreq::check_orbit1_gf(required_u64(params, "m"),
                                         required_u64(params, "order"));
    }
    if (name == "orbit2") {
        return partfreq::check_orbit2_gf(required_u64(params, "m"),
                                         required_u64(params, "order"));
    }
    if (name == "theorem4") {
        return partfreq::check_theorem4(required_u64(params, "b"),
                                        required_u64(params, "order"));
    }
    if (name == "remark4") {
        return partfreq::check_remark4(required_u64(params, "order"));
    }
    if (name == "corollary8") {
        return partfreq::check_corollary8(required_u64(params, "m"),
                                          required_u64(params, "order"));
    }
    if (name == "congruence") {
        return partfreq::check_congruence_statistics(
            required_u64(params, "A"), required_u64(params, "B"), required_u64(params, "C"),
            required_u64(params, "m"), required_u64(params, "nmax"));
    }
    if (name == "ady") {
        return partfreq::check_ady(required_u64(params, "m"), required_u64(params, "nmax"));
    }
    throw std::invalid_argument("unknown check \"" + name + '"');
}

}  // namespace

extern "C" {

const char* pf_status_name(pf_status status) {
    switch (status) {
        case PF_OK: return "ok";
        case PF_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case PF_ERROR_PARSE: return "parse error";
        case PF_ERROR_PRECONDITION: return "precondition violated";
        case PF_ERROR_OVERFLOW: return "overflow";
        case PF_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pf_last_error(void) { return g_last_error.c_str(); }

pf_status pf_partition_create(const uint64_t* parts, size_t count, pf_partition** out) {
    if (out == nullptr || (parts == nullptr && count > 0)) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::vector<std::uint64_t> data(parts, parts + count);
        *out = wrap(partfreq::Partition::from_unsorted(std::move(data)));
    });
}

pf_status pf_partition_parse(const char* text, int* reordered, pf_partition** out) {
    if (out == nullptr || text == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        bool changed = false;
        *out = wrap(parse_partition_text(text, &changed));
        if (reordered) *reordered = changed ? 1 : 0;
    });
}

void pf_partition_free(pf_partition* p) { delete p; }

size_t pf_partition_size(const pf_partition* p) { return p ? p->value.size() : 0; }

uint64_t pf_partition_part(const pf_partition* p, size_t index) {
    if (p == nullptr || index >= p->value.size()) return 0;
    return p->value.parts()[index];
}

uint64_t pf_partition_weight(const pf_partition* p) { return p ? p->value.weight() : 0; }

const char* pf_partition_str(const pf_partition* p) { return p ? p->text.c_str() : ""; }

pf_status pf_glaisher(const pf_partition* p, uint64_t m, pf_partition** out) {
    if (p == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] { *out = wrap(partfreq::glaisher(p->value, m)); });
}

pf_status pf_rotate(const pf_partition* p, uint64_t m, uint64_t steps, pf_partition** out) {
    if (p == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] { *out = wrap(partfreq::rotate(p->value, m, steps)); });
}

pf_status pf_orbit_size(const pf_partition* p, uint64_t m, uint64_t* out) {
    if (p == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] { *out = partfreq::orbit_size(p->value, m); });
}

pf_status pf_orbit_cycle(const pf_partition* p, uint64_t m, pf_partition_list** out) {
    if (p == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto list = std::make_unique<pf_partition_list>();
        for (partfreq::Partition& step : partfreq::orbit_cycle(p->value, m)) {
            pf_partition item;
            item.text = step.str();
            item.value = std::move(step);
            list->items.push_back(std::move(item));
        }
        *out = list.release();
    });
}

pf_status pf_ady_forward(const pf_partition* p, uint64_t m, pf_partition** out) {
    if (p == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] { *out = wrap(partfreq::ady_forward(p->value, m)); });
}

pf_status pf_ady_inverse(const pf_partition* p, uint64_t m, pf_partition** out) {
    if (p == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] { *out = wrap(partfreq::ady_inverse(p->value, m)); });
}

size_t pf_partition_list_size(const pf_partition_list* list) {
    return list ? list->items.size() : 0;
}

const pf_partition* pf_partition_list_get(const pf_partition_list* list, size_t index) {
    if (list == nullptr || index >= list->items.size()) return nullptr;
    return &list->items[index];
}

void pf_partition_list_free(pf_partition_list* list) { delete list; }

pf_status pf_orbit_table_compute(uint64_t n, uint64_t m, pf_orbit_table** out) {
    if (out == nullptr) return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new pf_orbit_table{partfreq::orbit_table(n, m)}; });
}

size_t pf_orbit_table_rows(const pf_orbit_table* t) { return t ? t->table.rows.size() : 0; }

uint64_t pf_orbit_table_orbit_size(const pf_orbit_table* t, size_t row) {
    if (t == nullptr || row >= t->table.rows.size()) return 0;
    return t->table.rows[row].orbit_size;
}

uint64_t pf_orbit_table_p_count(const pf_orbit_table* t, size_t row) {
    if (t == nullptr || row >= t->table.rows.size()) return 0;
    return t->table.rows[row].p_count;
}

uint64_t pf_orbit_table_o_count(const pf_orbit_table* t, size_t row) {
    if (t == nullptr || row >= t->table.rows.size()) return 0;
    return t->table.rows[row].o_count;
}

void pf_orbit_table_free(pf_orbit_table* t) { delete t; }

pf_status pf_series_expand(const char* product_spec, uint64_t order, pf_series** out) {
    if (product_spec == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        partfreq::ProductSpec spec;
        try {
            spec = partfreq::ProductSpec::parse(product_spec);
        } catch (const std::invalid_argument& e) {
            throw TextError(e.what());
        }
        auto handle = std::make_unique<pf_series>();
        handle->series = spec.expand(order);
        handle->decimals.reserve(order + 1);
        for (std::uint64_t e = 0; e <= order; ++e) {
            handle->decimals.push_back(handle->series.coeff(e).str());
        }
        *out = handle.release();
    });
}

pf_status pf_series_mod(const pf_series* s, uint64_t modulus, pf_series** out) {
    if (s == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto handle = std::make_unique<pf_series>();
        handle->series = s->series.reduced_mod(modulus);
        for (std::uint64_t e = 0; e <= handle->series.order(); ++e) {
            handle->decimals.push_back(handle->series.coeff(e).str());
        }
        *out = handle.release();
    });
}

uint64_t pf_series_order(const pf_series* s) { return s ? s->series.order() : 0; }

const char* pf_series_coeff(const pf_series* s, uint64_t exponent) {
    if (s == nullptr || exponent >= s->decimals.size()) return nullptr;
    return s->decimals[exponent].c_str();
}

void pf_series_free(pf_series* s) { delete s; }

const char* pf_partition_count(uint64_t n) {
    g_count_buffer = partfreq::partition_count(n).str();
    return g_count_buffer.c_str();
}

pf_status pf_check_run(const char* name, const char* params_json, pf_report** out) {
    if (name == nullptr || out == nullptr) {
        return set_error(PF_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        json params = json::object();
        if (params_json != nullptr && params_json[0] != '\0') {
            params = json::parse(params_json);
            if (!params.is_object()) {
                throw std::invalid_argument("params must be a JSON object");
            }
        }
        partfreq::CheckResult result = dispatch_check(name, params);
        auto report = std::make_unique<pf_report>();
        report->pass = result.pass;
        report->json_text = report_to_json(result).dump();
        *out = report.release();
    });
}

int pf_report_pass(const pf_report* r) { return r && r->pass ? 1 : 0; }

const char* pf_report_json(const pf_report* r) { return r ? r->json_text.c_str() : ""; }

void pf_report_free(pf_report* r) { delete r; }

}  // extern "C"
