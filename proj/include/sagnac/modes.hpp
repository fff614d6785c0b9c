#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sagnac {

enum class Path { a, b };
enum class Band { signal, idler, degenerate };

std::string to_string(Path p);
std::string to_string(Band b);

/// Identifies one optical mode by spatial path and frequency band.
/// The stage tag is free-form annotation and does not affect identity.
struct ModeLabel {
    Path path = Path::a;
    Band band = Band::degenerate;
    std::string stage{};

    bool same_mode(const ModeLabel& o) const { return path == o.path && band == o.band; }
    std::string name() const;
};

bool operator==(const ModeLabel& l, const ModeLabel& r);

/// Ordered list of modes. The order is fixed at construction; every state
/// and transform over the register uses the same order.
class ModeRegister {
  public:
    explicit ModeRegister(std::vector<ModeLabel> modes);

    static ModeRegister degenerate_pair();   // (a,deg), (b,deg)
    static ModeRegister nondegenerate_quad();// (a,s), (a,i), (b,s), (b,i)
    static ModeRegister single_path_pair();  // (a,s), (a,i)

    std::size_t size() const { return modes_.size(); }
    const ModeLabel& mode(std::size_t i) const { return modes_[i]; }
    const std::vector<ModeLabel>& modes() const { return modes_; }

    bool contains(const ModeLabel& m) const;
    std::size_t index_of(const ModeLabel& m) const;  // throws on unknown label
    bool is_degenerate() const;

  private:
    std::vector<ModeLabel> modes_;
};

bool operator==(const ModeRegister& l, const ModeRegister& r);

}  // namespace sagnac
