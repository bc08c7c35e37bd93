#pragma once

#include <string>
#include <vector>

namespace g2 {

/// Canonical float rendering used by every report: 12 significant digits,
/// fixed "%.12g" formatting, so identical runs emit byte-identical JSON.
std::string format_double(double v);

/// Minimal ordered JSON emitter. Keys are written in insertion order; callers
/// are responsible for a canonical field order. nlohmann::json is used for
/// parsing, but its dump() prints shortest-round-trip floats, which is not
/// the output contract here.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();

    JsonWriter& key(const std::string& k);

    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(std::size_t v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& null();

    JsonWriter& field(const std::string& k, double v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, int v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, long long v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, std::size_t v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, bool v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, const std::string& v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, const char* v) { return key(k).value(v); }

    const std::string& str() const { return out_; }

private:
    void separator();

    std::string out_;
    // true = container has at least one element already
    std::vector<bool> stack_;
    bool pending_key_ = false;
};

std::string json_escape(const std::string& s);

} // namespace g2
