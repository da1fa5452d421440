#pragma once

#include <json.hpp>

#include "lk/linkage.hpp"
#include "lk/script.hpp"

namespace lk {

struct RunOptions {
    uint32_t prime = 32003;
    std::string order = "grevlex";  // grevlex | lex
    int bound = -1;                 // resolution bound for betti/res; -1 = dim R + 2
    bool fail_fast = false;
    uint64_t seed = 20250808;
    int threads = 0;  // 0 = LK_THREADS env or hardware default
};

struct CheckOutcome {
    std::string check;   // printed form of the command
    std::string status;  // pass | fail | info | error
    std::string value;
    std::optional<LinkageReport> report;
    nlohmann::ordered_json data;  // structured payload (matrices, tables), may be null
    int64_t micros = 0;
};

// row-major entries as canonical polynomial strings, with the twist vectors
nlohmann::ordered_json matrix_json(const PolyMatrix& m);

struct RunReport {
    std::string engine_version;
    RunOptions opts;
    std::vector<CheckOutcome> results;
    int64_t total_micros = 0;

    int exit_code() const {
        bool fail = false;
        for (const auto& r : results) {
            if (r.status == "error") return 3;
            if (r.status == "fail") fail = true;
        }
        return fail ? 1 : 0;
    }
};

RunReport run_script(const dsl::Script& s, const RunOptions& opts);

// byte-deterministic for fixed input and version, except the "timing" section
nlohmann::ordered_json report_json(const RunReport& r);
std::string report_text(const RunReport& r);

}  // namespace lk
