#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "qzak/grid.hpp"
#include "qzak/state.hpp"

namespace qzak {

// Shortest round-trip decimal form (17 significant digits), '.' decimal
// separator regardless of locale.
std::string format_g17(double v);

// Comma-separated UTF-8 writer; always emits the header row on construction.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    void row_values(const std::vector<double>& values);
    void close();

  private:
    std::ofstream out_;
    std::size_t columns_;
};

// ---------------------------------------------------------------------------
// Checkpoint: magic "QZK1", then little-endian int64 N, doubles L, eps, t,
// then three coefficient arrays (E, n, nt), each N complex values stored as
// interleaved re/im doubles.
// ---------------------------------------------------------------------------

struct Checkpoint {
    std::int64_t size = 0;
    double length = 0.0;
    double eps = 0.0;
    double t = 0.0;
    FourierField E, n, nt;
};

void write_checkpoint(const std::string& path, const SpectralGrid& g, double eps,
                      const PrimalState& state);
Checkpoint read_checkpoint(const std::string& path);

// Human-readable JSON mirror of the same record (intended for small N).
void write_checkpoint_json(const std::string& path, const SpectralGrid& g, double eps,
                           const PrimalState& state);

}  // namespace qzak
