#include "latmid/fixtures.hpp"

namespace latmid {

namespace {

RatMat rows(std::vector<std::vector<long>> r) {
    std::vector<std::vector<Rat>> q;
    for (auto& row : r) {
        std::vector<Rat> qr;
        for (long x : row) qr.emplace_back(x);
        q.push_back(std::move(qr));
    }
    return RatMat::from_rows(q);
}

std::vector<GroupFixture> build() {
    std::vector<GroupFixture> out;

    GroupFixture c2;
    c2.name = "C2";
    c2.generators = {rows({{0, 1}, {1, 0}})};
    c2.order = 2;
    c2.invariant_gram = RatMat::identity(2);
    c2.epsilon = 1;
    out.push_back(c2);

    GroupFixture c3;
    c3.name = "C3";
    c3.generators = {rows({{0, -1}, {1, -1}})};
    c3.order = 3;
    c3.invariant_gram = rows({{2, -1}, {-1, 2}});
    c3.epsilon = 1;
    out.push_back(c3);

    GroupFixture s3;
    s3.name = "S3";
    s3.generators = {rows({{0, -1}, {1, -1}}), rows({{0, 1}, {1, 0}})};
    s3.order = 6;
    s3.invariant_gram = rows({{2, -1}, {-1, 2}});
    s3.epsilon = 1;
    out.push_back(s3);

    GroupFixture d4;
    d4.name = "D4";
    d4.generators = {rows({{0, -1}, {1, 0}}), rows({{1, 0}, {0, -1}})};
    d4.order = 8;
    d4.invariant_gram = RatMat::identity(2);
    d4.epsilon = 1;
    out.push_back(d4);

    // Q8 acting on the quaternions by left multiplication, basis (1, i, j, k);
    // invariant alternating form B(x, y) = Re(conj(x) y j).
    GroupFixture q8;
    q8.name = "Q8";
    q8.generators = {rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
                     rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}})};
    q8.order = 8;
    q8.invariant_gram = rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    q8.epsilon = -1;
    out.push_back(q8);

    return out;
}

} // namespace

const std::vector<GroupFixture>& fixture_groups() {
    static const std::vector<GroupFixture> groups = build();
    return groups;
}

std::vector<RatMat> enumerate_group(const std::vector<RatMat>& generators, size_t max_elements) {
    if (generators.empty()) return {};
    size_t n = generators[0].rows();
    std::vector<RatMat> elements{RatMat::identity(n)};
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t idx : frontier)
            for (const RatMat& g : generators) {
                RatMat prod = g * elements[idx];
                bool known = false;
                for (const RatMat& e : elements)
                    if (e == prod) {
                        known = true;
                        break;
                    }
                if (!known) {
                    elements.push_back(prod);
                    next.push_back(elements.size() - 1);
                    if (elements.size() > max_elements)
                        throw UnboundedAction("enumerate_group: more than " + std::to_string(max_elements) +
                                              " elements");
                }
            }
        frontier = std::move(next);
    }
    return elements;
}

} // namespace latmid
