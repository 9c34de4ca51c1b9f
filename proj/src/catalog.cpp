#include "polycss/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace polycss {

using nlohmann::ordered_json;

namespace {

auto key_of(const CatalogRecord& r) { return std::tuple(r.q, r.n, r.k); }

bool key_less(const CatalogRecord& a, const CatalogRecord& b) { return key_of(a) < key_of(b); }

std::string params_text(const CatalogRecord& r) {
    return "[[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "]]_" + r.label;
}

}  // namespace

std::string validate_record(const CatalogRecord& r) {
    if (!is_supported_field_order(r.q)) return "unsupported field order q = " + std::to_string(r.q);
    if (r.n < 1 || r.n > kCatalogMaxLength)
        return "length n = " + std::to_string(r.n) + " outside 1.." + std::to_string(kCatalogMaxLength);
    if (r.k < 0 || r.k > r.n) return "dimension k = " + std::to_string(r.k) + " outside 0..n";
    if (r.d < 1) return "distance d must be at least 1";
    const int defect = r.n - r.k - 2 * (r.d - 1);
    if (defect < 0) return params_text(r) + " violates the quantum Singleton bound k <= n - 2(d-1)";
    if (r.mds != (defect == 0)) return std::string("mds flag is ") + (r.mds ? "true" : "false") +
                                       " but the Singleton defect is " + std::to_string(defect);
    return {};
}

CatalogRecord record_from_params(const QuantumParams& p) {
    CatalogRecord r;
    r.q = p.q_base;
    r.label = p.label.empty() ? default_label(p.q_base) : p.label;
    r.n = p.n;
    r.k = p.k;
    r.d = p.d;
    r.mds = is_mds(p);
    r.ref = p.reference;
    if (!p.witness.empty()) r.witness = p.witness;
    return r;
}

QuantumParams params_from_record(const CatalogRecord& r) {
    QuantumParams p = QuantumParams::make(r.q, r.n, r.k, r.d, false);
    p.label = r.label;
    p.reference = r.ref;
    if (r.witness) p.witness = *r.witness;
    return p;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Inserted: return "inserted";
        case Verdict::Improved: return "improved";
        case Verdict::Dominated: return "dominated";
    }
    return "?";
}

CatalogFormat format_for(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".csv" ? CatalogFormat::Csv : CatalogFormat::Json;
}

namespace {

ordered_json record_json(const CatalogRecord& r) {
    ordered_json j;
    j["q"] = r.q;
    j["label"] = r.label;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["mds"] = r.mds;
    j["ref"] = r.ref;
    if (r.witness) {
        ordered_json w = ordered_json::object();
        for (const auto& [key, value] : *r.witness) w[key] = value;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

int line_at(std::string_view text, std::size_t offset) {
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(std::min(offset, text.size())), '\n'));
}

// Line on which each element of the top-level array starts.
std::vector<int> element_lines(std::string_view text) {
    std::vector<int> lines;
    int depth = 0;
    int line = 1;
    bool in_string = false;
    bool escaped = false;
    bool expect_element = false;
    for (char c : text) {
        if (c == '\n') ++line;
        if (in_string) {
            if (escaped)
                escaped = false;
            else if (c == '\\')
                escaped = true;
            else if (c == '"')
                in_string = false;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (depth == 1 && expect_element && c != ']') {
            lines.push_back(line);
            expect_element = false;
        }
        switch (c) {
            case '"': in_string = true; break;
            case '[':
            case '{':
                if (++depth == 1) expect_element = true;
                break;
            case ']':
            case '}': --depth; break;
            case ',':
                if (depth == 1) expect_element = true;
                break;
            default: break;
        }
    }
    return lines;
}

template <class T>
T field_as(const ordered_json& obj, const char* name) {
    if (!obj.contains(name)) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    const ordered_json& v = obj.at(name);
    if constexpr (std::is_same_v<T, int>) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string("field \"") + name + "\" must be an integer");
    } else if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw std::invalid_argument(std::string("field \"") + name + "\" must be a boolean");
    } else {
        if (!v.is_string()) throw std::invalid_argument(std::string("field \"") + name + "\" must be a string");
    }
    return v.get<T>();
}

CatalogRecord record_from_json(const ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("record must be an object");
    CatalogRecord r;
    r.q = field_as<int>(j, "q");
    r.n = field_as<int>(j, "n");
    r.k = field_as<int>(j, "k");
    r.d = field_as<int>(j, "d");
    r.label = j.contains("label") ? field_as<std::string>(j, "label") : default_label(r.q);
    r.ref = j.contains("ref") ? field_as<std::string>(j, "ref") : std::string();
    const int defect = r.n - r.k - 2 * (r.d - 1);
    r.mds = j.contains("mds") ? field_as<bool>(j, "mds") : defect == 0;
    if (j.contains("witness") && !j.at("witness").is_null()) {
        const ordered_json& w = j.at("witness");
        if (!w.is_object()) throw std::invalid_argument("witness must be an object or null");
        Witness out;
        for (const auto& [key, value] : w.items()) {
            if (!value.is_string()) throw std::invalid_argument("witness values must be strings");
            out[key] = value.get<std::string>();
        }
        r.witness = std::move(out);
    }
    return r;
}

std::vector<std::string> split_csv_line(std::string_view line, int line_no) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unterminated quoted field");
    out.push_back(std::move(cur));
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

constexpr const char* kCsvHeader = "q,label,n,k,d,mds,ref";

int parse_int(const std::string& s, const char* name) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw std::invalid_argument(std::string(name) + " is not an integer: \"" + s + "\"");
    return v;
}

}  // namespace

std::string record_to_json(const CatalogRecord& r) { return record_json(r).dump(); }

Catalog::Catalog() : records_(std::make_shared<const std::vector<CatalogRecord>>()) {}

Catalog::Snapshot Catalog::snapshot() const {
    std::lock_guard lock(mu_);
    return records_;
}

std::vector<AuditEntry> Catalog::audit_log() const {
    std::lock_guard lock(mu_);
    return audit_;
}

Verdict Catalog::apply_locked(const CatalogRecord& rec) {
    auto next = std::make_shared<std::vector<CatalogRecord>>(*records_);
    auto it = std::lower_bound(next->begin(), next->end(), rec, key_less);
    Verdict v;
    if (it == next->end() || key_of(*it) != key_of(rec)) {
        next->insert(it, rec);
        v = Verdict::Inserted;
    } else if (rec.d > it->d) {
        audit_.push_back({*it, rec});
        *it = rec;
        v = Verdict::Improved;
    } else {
        return Verdict::Dominated;
    }
    records_ = std::move(next);
    return v;
}

Verdict Catalog::update_if_better(const CatalogRecord& rec) {
    if (const std::string why = validate_record(rec); !why.empty()) throw Error(ErrorKind::InvalidParams, why);
    std::lock_guard lock(mu_);
    return apply_locked(rec);
}

IngestResult Catalog::ingest_text(std::string_view text, CatalogFormat format) {
    std::vector<std::pair<int, CatalogRecord>> rows;
    IngestResult result;
    auto reject = [&](int line, std::string msg) { result.rejected.push_back({line, std::move(msg)}); };

    if (format == CatalogFormat::Json) {
        if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) return result;
        ordered_json doc;
        try {
            doc = ordered_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_at(text, e.byte == 0 ? 0 : e.byte - 1)) +
                                              ": malformed JSON (" + e.what() + ")");
        }
        if (!doc.is_array()) throw Error(ErrorKind::Parse, "line 1: catalog JSON must be an array of records");
        const std::vector<int> lines = element_lines(text);
        for (std::size_t i = 0; i < doc.size(); ++i) {
            const int line = i < lines.size() ? lines[i] : 0;
            try {
                rows.emplace_back(line, record_from_json(doc[i]));
            } catch (const std::exception& e) {
                reject(line, e.what());
            }
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string line;
        int line_no = 0;
        bool header_seen = false;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (!header_seen) {
                if (line != kCsvHeader)
                    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected header \"" +
                                                      kCsvHeader + "\"");
                header_seen = true;
                continue;
            }
            const auto cells = split_csv_line(line, line_no);
            if (cells.size() != 7) {
                reject(line_no, "expected 7 columns, found " + std::to_string(cells.size()));
                continue;
            }
            try {
                CatalogRecord r;
                r.q = parse_int(cells[0], "q");
                r.label = cells[1].empty() ? default_label(r.q) : cells[1];
                r.n = parse_int(cells[2], "n");
                r.k = parse_int(cells[3], "k");
                r.d = parse_int(cells[4], "d");
                if (cells[5] != "true" && cells[5] != "false")
                    throw std::invalid_argument("mds must be true or false");
                r.mds = cells[5] == "true";
                r.ref = cells[6];
                rows.emplace_back(line_no, std::move(r));
            } catch (const std::exception& e) {
                reject(line_no, e.what());
            }
        }
    }

    std::lock_guard lock(mu_);
    for (auto& [line, rec] : rows) {
        if (const std::string why = validate_record(rec); !why.empty()) {
            reject(line, why);
            continue;
        }
        ++result.accepted;
        if (apply_locked(rec) != Verdict::Dominated) ++result.loaded;
    }
    std::stable_sort(result.rejected.begin(), result.rejected.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    return result;
}

IngestResult Catalog::ingest_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return ingest_text(buf.str(), format_for(path));
}

std::optional<CatalogRecord> Catalog::query_exact(int q, int n, int k) const {
    (void)field_of_order(q);
    const Snapshot s = snapshot();
    CatalogRecord probe;
    probe.q = q;
    probe.n = n;
    probe.k = k;
    auto it = std::lower_bound(s->begin(), s->end(), probe, key_less);
    if (it != s->end() && key_of(*it) == key_of(probe)) return *it;
    return std::nullopt;
}

std::vector<CatalogRecord> Catalog::query_by_distance(int q, int n, int d) const {
    (void)field_of_order(q);
    std::vector<CatalogRecord> out;
    for (const CatalogRecord& r : *snapshot())
        if (r.q == q && r.n == n && r.d >= d) out.push_back(r);
    return out;
}

std::vector<CatalogRecord> Catalog::query_range(int q, int n_lo, int n_hi, int d_lo, int d_hi) const {
    (void)field_of_order(q);
    std::vector<CatalogRecord> out;
    for (const CatalogRecord& r : *snapshot())
        if (r.q == q && r.n >= n_lo && r.n <= n_hi && r.d >= d_lo && r.d <= d_hi) out.push_back(r);
    return out;
}

namespace {

std::string render(const std::vector<CatalogRecord>& records, CatalogFormat format) {
    const auto* s = &records;
    std::string out;
    if (format == CatalogFormat::Json) {
        if (s->empty()) return "[]\n";
        out = "[\n";
        for (std::size_t i = 0; i < s->size(); ++i) {
            out += "  " + record_to_json((*s)[i]);
            out += i + 1 < s->size() ? ",\n" : "\n";
        }
        out += "]\n";
    } else {
        out = std::string(kCsvHeader) + "\n";
        for (const CatalogRecord& r : *s)
            out += std::to_string(r.q) + "," + csv_field(r.label) + "," + std::to_string(r.n) + "," +
                   std::to_string(r.k) + "," + std::to_string(r.d) + "," + (r.mds ? "true" : "false") + "," +
                   csv_field(r.ref) + "\n";
    }
    return out;
}

}  // namespace

std::string Catalog::to_text(CatalogFormat format) const { return render(*snapshot(), format); }

std::size_t Catalog::export_file(const std::filesystem::path& path) const {
    return export_file(path, format_for(path));
}

std::size_t Catalog::export_file(const std::filesystem::path& path, CatalogFormat format) const {
    const Snapshot s = snapshot();
    const std::string text = render(*s, format);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw Error(ErrorKind::Io, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorKind::Io, "cannot replace " + path.string());
    }
    return s->size();
}

}  // namespace polycss
