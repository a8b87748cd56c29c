#include "icsq/fixtures.hpp"

namespace icsq::fixtures {

FaceSet point()
{
    FaceSetBuilder b;
    b.add("0", 0, {});
    return b.freeze();
}

FaceSet circle()
{
    return complex_from_maximal({{0, 1}, {1, 2}, {0, 2}});
}

FaceSet simplex(int d)
{
    std::vector<int> verts;
    for (int v = 0; v <= d; ++v)
        verts.push_back(v);
    return complex_from_maximal({verts});
}

FaceSet rp2()
{
    return complex_from_maximal({{1, 2, 3},
                                 {1, 2, 4},
                                 {1, 3, 5},
                                 {1, 4, 6},
                                 {1, 5, 6},
                                 {2, 3, 6},
                                 {2, 4, 5},
                                 {2, 5, 6},
                                 {3, 4, 5},
                                 {3, 4, 6}});
}

FaceSet torus()
{
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return complex_from_maximal(tris);
}

FaceSet klein_bottle()
{
    // Vertices (x, y) on a 3x3 grid, label 3x + y. Wrapping x = 3 glues to
    // column 0 with y reversed.
    auto vert = [](int x, int y) {
        y = ((y % 3) + 3) % 3;
        if (x == 3) {
            x = 0;
            y = (3 - y) % 3;
        }
        return 3 * x + y;
    };
    std::vector<std::vector<int>> tris;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            const int a = vert(x, y), b = vert(x + 1, y);
            const int c = vert(x, y + 1), d = vert(x + 1, y + 1);
            tris.push_back({a, b, d});
            tris.push_back({a, c, d});
        }
    return complex_from_maximal(tris);
}

FaceSet mobius_band()
{
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < 5; ++i)
        tris.push_back({i, (i + 1) % 5, (i + 2) % 5});
    return complex_from_maximal(tris);
}

} // namespace icsq::fixtures
