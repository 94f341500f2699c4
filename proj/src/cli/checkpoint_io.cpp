#include "giuga/cli/checkpoint_io.hpp"

#include <fstream>
#include <sstream>

namespace giuga::cli {

namespace {

std::uint64_t read_u64(const Json& j, const char* key)
{
    if (!j.contains(key)) throw std::invalid_argument(std::string("checkpoint missing \"") + key + "\"");
    const Json& v = j.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        Int parsed;
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || parsed.set_str(s, 10) != 0 ||
            !fits_u64(parsed)) {
            throw std::invalid_argument(std::string("checkpoint field \"") + key + "\" is not a decimal integer");
        }
        return to_u64(parsed);
    }
    throw std::invalid_argument(std::string("checkpoint field \"") + key + "\" has the wrong type");
}

}  // namespace

Json checkpoint_to_json(const ScanCheckpoint& cp)
{
    Json j;
    j["from"] = std::to_string(cp.from);
    j["to"] = std::to_string(cp.to);
    j["next_unscanned"] = std::to_string(cp.next_unscanned);
    j["counterexamples"] = int_list(cp.counterexamples);
    j["scanned_count"] = std::to_string(cp.scanned_count);
    return j;
}

ScanCheckpoint checkpoint_from_json(const Json& j)
{
    if (!j.is_object()) throw std::invalid_argument("checkpoint must be a JSON object");
    ScanCheckpoint cp;
    cp.from = read_u64(j, "from");
    cp.to = read_u64(j, "to");
    cp.next_unscanned = read_u64(j, "next_unscanned");
    cp.scanned_count = read_u64(j, "scanned_count");
    if (!j.contains("counterexamples") || !j.at("counterexamples").is_array()) {
        throw std::invalid_argument("checkpoint \"counterexamples\" must be an array");
    }
    for (const Json& v : j.at("counterexamples")) {
        Json wrapper;
        wrapper["v"] = v;
        cp.counterexamples.push_back(from_u64(read_u64(wrapper, "v")));
    }
    cp.validate();
    return cp;
}

std::optional<ScanCheckpoint> read_checkpoint(const std::filesystem::path& path)
{
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open checkpoint " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("corrupt checkpoint " + path.string() + ": " + e.what());
    }
    try {
        return checkpoint_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("corrupt checkpoint " + path.string() + ": " + e.what());
    }
}

void write_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& cp)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << checkpoint_to_json(cp).dump() << '\n';
        if (!out) throw std::runtime_error("failed writing checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace giuga::cli
