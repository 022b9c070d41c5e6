#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ssd {

// Ordered key/value command output. Insertion order is preserved so reports
// are byte-stable for fixed inputs and seeds.
class Report {
public:
    void add(std::string key, std::string value);
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    void add(std::string key, long long value);
    void add_flag(std::string key, bool value);   // "yes" / "no"

    std::string to_text() const;   // one "key: value" line per entry
    std::string to_json() const;   // flat string object, entry order kept

    const std::vector<std::pair<std::string, std::string>>& items() const { return items_; }

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

}  // namespace ssd
