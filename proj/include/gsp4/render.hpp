#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gsp4/bigint.hpp"

namespace gsp4 {

enum class Format { Csv, Json, Md };

std::optional<Format> parse_format(const std::string& text);

// One output row. An empty value renders as "unknown" (never 0).
struct OutputRecord {
    long long k = 0;
    long long p = 0;
    std::string type;
    std::optional<BigInt> value;
    std::string route;
};

std::string value_text(const std::optional<BigInt>& value);

// Flat record rendering. CSV header: k,p,type,value,route. JSON: array of
// objects with that key order. Markdown: one row per record.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

// Markdown pivot used by the table subcommand: primes as rows, weights as
// columns, mirroring the published table layout.
void write_table_markdown(std::ostream& out, const std::string& type_label,
                          const std::vector<long long>& primes,
                          const std::vector<long long>& weights,
                          const std::vector<std::vector<std::string>>& cells);

}  // namespace gsp4
