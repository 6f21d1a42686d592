#include "partlog/cache.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace partlog {

namespace {

std::string sanitize(const std::string& label) {
    std::string out;
    for (char c : label)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
    return out;
}

}  // namespace

CacheConfig CacheConfig::from_env() {
    if (const char* dir = std::getenv("PARTLOG_CACHE_DIR"); dir && *dir)
        return CacheConfig{std::filesystem::path(dir)};
    return CacheConfig{std::filesystem::path(".partlog-cache")};
}

std::filesystem::path cache_path(const CacheConfig& config, const std::string& label,
                                 const std::string& version) {
    return config.dir / (sanitize(label) + ".v" + sanitize(version) + ".seq");
}

void write_sequence_file(const std::filesystem::path& path, const ExactSequence& seq) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
        out << "partlog-seq v1 family=" << seq.label() << " start=" << seq.start_index()
            << " count=" << seq.size() << "\n";
        for (const Rational& v : seq.values()) out << v.str() << "\n";
        if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

ExactSequence read_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cache: cannot read " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("cache: empty file " + path.string());

    std::istringstream hs(header);
    std::string magic, version, family_kv, start_kv, count_kv;
    hs >> magic >> version >> family_kv >> start_kv >> count_kv;
    const auto expect_key = [&](const std::string& kv, const std::string& key) {
        if (!kv.starts_with(key + "="))
            throw std::runtime_error("cache: bad header in " + path.string());
        return kv.substr(key.size() + 1);
    };
    if (magic != "partlog-seq" || version != "v1")
        throw std::runtime_error("cache: bad magic in " + path.string());
    const std::string label = expect_key(family_kv, "family");
    const std::size_t start = std::stoull(expect_key(start_kv, "start"));
    const std::size_t count = std::stoull(expect_key(count_kv, "count"));

    std::vector<Rational> values;
    values.reserve(count);
    std::string line;
    while (values.size() < count && std::getline(in, line)) {
        if (line.empty()) continue;
        values.push_back(Rational::from_string(line));
    }
    if (values.size() != count)
        throw std::runtime_error("cache: truncated file " + path.string());
    return ExactSequence(label, start, std::move(values));
}

ExactSequence cached_generate(const CacheConfig& config, const PartitionFamily& family,
                              std::size_t upto) {
    const std::filesystem::path path = cache_path(config, family.canonical());
    if (std::filesystem::exists(path)) {
        try {
            ExactSequence cached = read_sequence_file(path);
            if (cached.label() == family.canonical() && cached.start_index() == 0 &&
                cached.covers(upto))
                return cached;
        } catch (const std::exception&) {
            // unreadable cache: fall through and regenerate
        }
    }
    ExactSequence fresh = generate(family, upto);
    write_sequence_file(path, fresh);
    return fresh;
}

}  // namespace partlog
