#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polycss/css.hpp"

namespace polycss {

inline constexpr int kCatalogMaxLength = 200;

struct CatalogRecord {
    int q = 0;
    std::string label;
    int n = 0;
    int k = 0;
    int d = 1;
    bool mds = false;
    std::string ref;
    std::optional<Witness> witness;

    friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

// Checks ranges, the Singleton bound and the mds flag. Returns an empty string when valid.
std::string validate_record(const CatalogRecord& r);
CatalogRecord record_from_params(const QuantumParams& p);
QuantumParams params_from_record(const CatalogRecord& r);

enum class Verdict { Inserted, Improved, Dominated };
const char* to_string(Verdict v);

struct Diagnostic {
    int line = 0;
    std::string message;
};

struct IngestResult {
    std::size_t loaded = 0;  // records that were inserted or improved an entry
    std::size_t accepted = 0;  // valid rows, including ones dominated by an existing entry
    std::vector<Diagnostic> rejected;
};

struct AuditEntry {
    CatalogRecord replaced;
    CatalogRecord by;
};

enum class CatalogFormat { Json, Csv };
// By extension: ".csv" is CSV, anything else JSON.
CatalogFormat format_for(const std::filesystem::path& p);

// Best-known [[n, k, d]] records, unique per (q, n, k). Readers work on immutable snapshots;
// writers are serialized.
class Catalog {
public:
    using Snapshot = std::shared_ptr<const std::vector<CatalogRecord>>;  // sorted by (q, n, k)

    Catalog();

    // Malformed files throw Error(Parse) with a line number; invalid rows are skipped and reported.
    IngestResult ingest_text(std::string_view text, CatalogFormat format);
    IngestResult ingest_file(const std::filesystem::path& path);

    std::optional<CatalogRecord> query_exact(int q, int n, int k) const;
    // Records at (q, n) with stored d >= d.
    std::vector<CatalogRecord> query_by_distance(int q, int n, int d) const;
    // Records with n and d inside the closed ranges, sorted by (n, k).
    std::vector<CatalogRecord> query_range(int q, int n_lo, int n_hi, int d_lo, int d_hi) const;

    // Throws Error(InvalidParams) for an invalid record.
    Verdict update_if_better(const CatalogRecord& rec);

    Snapshot snapshot() const;
    std::size_t size() const { return snapshot()->size(); }
    std::vector<AuditEntry> audit_log() const;

    std::string to_text(CatalogFormat format) const;
    // Writes to a temporary sibling and renames it over the target. Returns the record count.
    std::size_t export_file(const std::filesystem::path& path) const;
    std::size_t export_file(const std::filesystem::path& path, CatalogFormat format) const;

private:
    Verdict apply_locked(const CatalogRecord& rec);

    mutable std::mutex mu_;
    Snapshot records_;
    std::vector<AuditEntry> audit_;
};

std::string record_to_json(const CatalogRecord& r);

}  // namespace polycss
