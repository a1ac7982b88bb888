#pragma once

namespace crystfib {

// Bundled two-dimensional catalog: the 17 wallpaper groups, IT plane-group
// numbering.  Square-lattice types use the identity Gram, hexagonal types
// the standard hexagonal form.
inline const char* atlas2d_text() {
  return R"CAT(
# Two-dimensional space-group catalog (plane groups, IT numbering 1-17).
# Generators follow the standard conventions: A = -I, B = diag(1,-1),
# C = axis swap, with half-lattice translations for glides.

[group]
# p1; oblique
id = 2/1
name = p1

[group]
# p2; halfturn
id = 2/2
name = p2
op = -x,-y

[group]
# pm; mirror
id = 2/3
name = pm
op = x,-y

[group]
# pg; glide
id = 2/4
name = pg
op = x+1/2,-y

[group]
# cm; mirror on a rhombic lattice
id = 2/5
name = cm
op = y,x

[group]
# pmm; two mirror classes
id = 2/6
name = pmm
op = -x,-y
op = x,-y

[group]
# pmg; mirrors one way, glides the other
id = 2/7
name = pmg
op = -x,-y
op = x,-y+1/2

[group]
# pgg; glides both ways
id = 2/8
name = pgg
op = -x,-y
op = x+1/2,-y+1/2

[group]
# cmm; halfturns and mirrors on a rhombic lattice
id = 2/9
name = cmm
op = -x,-y
op = y,x

[group]
# p4
id = 2/10
name = p4
op = -y,x

[group]
# p4m; mirrors through the fourfold centers
id = 2/11
name = p4m
op = -y,x
op = x,-y

[group]
# p4g; axial glides, diagonal mirrors
id = 2/12
name = p4g
op = -y,x
op = x+1/2,-y+1/2

[group]
# p3
id = 2/13
name = p3
gram = 2 -1; -1 2
op = -y,x-y

[group]
# p3m1; all threefold centers on mirrors
id = 2/14
name = p3m1
gram = 2 -1; -1 2
op = -y,x-y
op = -y,-x

[group]
# p31m; threefold centers off the mirrors
id = 2/15
name = p31m
gram = 2 -1; -1 2
op = -y,x-y
op = y,x

[group]
# p6
id = 2/16
name = p6
gram = 2 -1; -1 2
op = x-y,x

[group]
# p6m
id = 2/17
name = p6m
gram = 2 -1; -1 2
op = x-y,x
op = y,x
)CAT";
}

}  // namespace crystfib
