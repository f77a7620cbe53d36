#include "stampgate/cost_table.hpp"

namespace stampgate {

std::vector<std::string> CostTable::violations() const {
    std::vector<std::string> out;
    const std::pair<const char*, Units> fields[] = {
        {"header_inspect", header_inspect}, {"drop", drop},         {"open_body", open_body},
        {"stamp_check", stamp_check},       {"siv_validate", siv_validate},
        {"blacklist_probe", blacklist_probe}, {"plan_packet", plan_packet},
        {"scan_kb", scan_kb},               {"key_reply", key_reply},
    };
    for (const auto& [name, value] : fields) {
        if (value == 0) out.push_back(std::string("costs.") + name + " must be > 0");
    }
    if (drop >= stamp_check) out.emplace_back("costs.drop must be < costs.stamp_check");
    return out;
}

}  // namespace stampgate
