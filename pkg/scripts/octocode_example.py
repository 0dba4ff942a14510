"""Row-wise images of the Octocode generator under eta^3 and xi^3 in both layouts.

Also reports the parameters of the Octocode and of its codeword image.
"""

import numpy as np

from modgray import catalog, codes, graymaps as gm
from modgray.codes import LinearCode
from modgray.ring import RingSpec
from modgray.weights import WeightKind, min_weight


def main():
    g8 = catalog.get_fixture("octocode_z8")
    expected = catalog.get_fixture("octocode_image_expected").matrix
    code = LinearCode(g8.spec, g8.matrix)
    for variant in ("eta", "xi"):
        gmap = gm.modular_map(variant, 3)
        for layout in gm.Layout:
            out = gm.map_generator_rows(gmap, layout, code)
            hit = "matches printed matrix" if np.array_equal(out, expected) else "differs"
            print(f"{variant}^3 {layout.value:>9}: {hit}")
    words = codes.enumerate_codewords(code)
    print(f"|C| = {len(words)}, profile {codes.standard_form(code).profile}")
    for kind in WeightKind:
        print(f"  d_{kind.value} = {min_weight(words, code.spec, kind)}")
    img = np.array(sorted(gm.map_codeword_set(gm.eta(3), "blockwise", code)))
    z4 = RingSpec(2, 2)
    closed = codes.is_additively_closed(img, z4)
    print(f"eta^3 image: {len(img)} words of length {img.shape[1]} over Z_4, "
          f"min homogeneous distance {min_weight(img, z4, 'homogeneous')}, additively closed: {closed}")


if __name__ == "__main__":
    main()
