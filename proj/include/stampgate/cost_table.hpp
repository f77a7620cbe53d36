#pragma once

#include <string>
#include <vector>

#include "stampgate/core_model.hpp"

namespace stampgate {

// Process-unit price of every action an engine can take. `drop` is the
// cheap-drop time and `stamp_check` the full check time of the stamp path;
// a valid table keeps drop < stamp_check.
struct CostTable {
    Units header_inspect = 1;
    Units drop = 1;
    Units open_body = 3;
    Units stamp_check = 5;
    Units siv_validate = 10;
    Units blacklist_probe = 1;
    Units plan_packet = 2;
    Units scan_kb = 1;
    Units key_reply = 2;

    // Returns one diagnostic per violated constraint; empty means valid.
    [[nodiscard]] std::vector<std::string> violations() const;

    [[nodiscard]] Units scan_cost(std::size_t bytes) const noexcept {
        return scan_kb * ((bytes + 1023) / 1024);
    }
};

}  // namespace stampgate
