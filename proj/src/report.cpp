#include "ssd/report.hpp"

#include "json.hpp"

#include <sstream>

namespace ssd {

void Report::add(std::string key, std::string value) {
    items_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, long long value) {
    add(std::move(key), std::to_string(value));
}

void Report::add_flag(std::string key, bool value) {
    add(std::move(key), value ? "yes" : "no");
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (const auto& [key, value] : items_) out << key << ": " << value << '\n';
    return out.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : items_) j[key] = value;
    return j.dump(2) + "\n";
}

}  // namespace ssd
