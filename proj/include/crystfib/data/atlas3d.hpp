#pragma once

namespace crystfib {

// Generated three-dimensional catalog; see atlas.hpp for the loader.
inline const char* atlas3d_text() {
  return R"CAT(
# Bundled three-dimensional space-group catalog (primitive settings).
# One representative per isomorphism class; enantiomorphic partners
# (76/78, 91/95, 92/96, 144/145, 151/153, 152/154, 169/170, 171/172,
#  178/179, 180/181, 212/213) share the lower-numbered entry.
# Operations derive from the standard Hall-symbol settings, rebased to
# a primitive cell; Gram rows are scaled to integers.

[group]
# P 1; Hall P 1; point order 1
id = 3/1
name = P 1
gram = 1 0 0; 0 1 0; 0 0 1

[group]
# P -1; Hall -P 1; point order 2
id = 3/2
name = P -1
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,-z

[group]
# P 1 2 1; Hall P 2y; point order 2
id = 3/3
name = P 1 2 1
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,y,-z

[group]
# P 1 21 1; Hall P 2yb; point order 2
id = 3/4
name = P 1 21 1
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,y+1/2,-z

[group]
# C 1 2 1; Hall C 2y; point order 2
id = 3/5
name = C 1 2 1
gram = 1 0 0; 0 1 0; 0 0 2
op = -y,-x,-z

[group]
# P 1 m 1; Hall P -2y; point order 2
id = 3/6
name = P 1 m 1
gram = 1 0 0; 0 1 0; 0 0 1
op = x,-y,z

[group]
# P 1 c 1; Hall P -2yc; point order 2
id = 3/7
name = P 1 c 1
gram = 1 0 0; 0 1 0; 0 0 1
op = x,-y,z+1/2

[group]
# C 1 m 1; Hall C -2y; point order 2
id = 3/8
name = C 1 m 1
gram = 1 0 0; 0 1 0; 0 0 2
op = y,x,z

[group]
# C 1 c 1; Hall C -2yc; point order 2
id = 3/9
name = C 1 c 1
gram = 1 0 0; 0 1 0; 0 0 2
op = y,x,z+1/2

[group]
# P 1 2/m 1; Hall -P 2y; point order 4
id = 3/10
name = P 1 2/m 1
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,y,-z
op = -x,-y,-z

[group]
# P 1 21/m 1; Hall -P 2yb; point order 4
id = 3/11
name = P 1 21/m 1
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,y+1/2,-z
op = -x,-y,-z

[group]
# C 1 2/m 1; Hall -C 2y; point order 4
id = 3/12
name = C 1 2/m 1
gram = 1 0 0; 0 1 0; 0 0 2
op = -y,-x,-z
op = -x,-y,-z

[group]
# P 1 2/c 1; Hall -P 2yc; point order 4
id = 3/13
name = P 1 2/c 1
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,y,-z+1/2
op = -x,-y,-z

[group]
# P 1 21/c 1; Hall -P 2ybc; point order 4
id = 3/14
name = P 1 21/c 1
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,y+1/2,-z+1/2
op = -x,-y,-z

[group]
# C 1 2/c 1; Hall -C 2yc; point order 4
id = 3/15
name = C 1 2/c 1
gram = 1 0 0; 0 1 0; 0 0 2
op = -y,-x,-z+1/2
op = -x,-y,-z

[group]
# P 2 2 2; Hall P 2 2; point order 4
id = 3/16
name = P 2 2 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x,-y,-z

[group]
# P 2 2 21; Hall P 2c 2; point order 4
id = 3/17
name = P 2 2 21
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z+1/2
op = x,-y,-z

[group]
# P 21 21 2; Hall P 2 2ab; point order 4
id = 3/18
name = P 21 21 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x+1/2,-y+1/2,-z

[group]
# P 21 21 21; Hall P 2ac 2ab; point order 4
id = 3/19
name = P 21 21 21
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z+1/2
op = x+1/2,-y+1/2,-z

[group]
# C 2 2 21; Hall C 2c 2; point order 4
id = 3/20
name = C 2 2 21
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z+1/2
op = y,x,-z

[group]
# C 2 2 2; Hall C 2 2; point order 4
id = 3/21
name = C 2 2 2
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z
op = y,x,-z

[group]
# F 2 2 2; Hall F 2 2; point order 4
id = 3/22
name = F 2 2 2
gram = 2 1 1; 1 2 1; 1 1 2
op = y,x,-x-y-z
op = -x-y-z,z,y

[group]
# I 2 2 2; Hall I 2 2; point order 4
id = 3/23
name = I 2 2 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z,x-z,-z
op = -x,-x+z,-x+y

[group]
# I 21 21 21; Hall I 2b 2c; point order 4
id = 3/24
name = I 21 21 21
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z+1/2,x-z,-z+1/2
op = -x+1/2,-x+z+1/2,-x+y

[group]
# P m m 2; Hall P 2 -2; point order 4
id = 3/25
name = P m m 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = -x,y,z

[group]
# P m c 21; Hall P 2c -2; point order 4
id = 3/26
name = P m c 21
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z+1/2
op = -x,y,z

[group]
# P c c 2; Hall P 2 -2c; point order 4
id = 3/27
name = P c c 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = -x,y,z+1/2

[group]
# P m a 2; Hall P 2 -2a; point order 4
id = 3/28
name = P m a 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = -x+1/2,y,z

[group]
# P c a 21; Hall P 2c -2ac; point order 4
id = 3/29
name = P c a 21
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z+1/2
op = -x+1/2,y,z+1/2

[group]
# P n c 2; Hall P 2 -2bc; point order 4
id = 3/30
name = P n c 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = -x,y+1/2,z+1/2

[group]
# P m n 21; Hall P 2ac -2; point order 4
id = 3/31
name = P m n 21
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z+1/2
op = -x,y,z

[group]
# P b a 2; Hall P 2 -2ab; point order 4
id = 3/32
name = P b a 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = -x+1/2,y+1/2,z

[group]
# P n a 21; Hall P 2c -2n; point order 4
id = 3/33
name = P n a 21
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z+1/2
op = -x+1/2,y+1/2,z+1/2

[group]
# P n n 2; Hall P 2 -2n; point order 4
id = 3/34
name = P n n 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = -x+1/2,y+1/2,z+1/2

[group]
# C m m 2; Hall C 2 -2; point order 4
id = 3/35
name = C m m 2
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z
op = -y,-x,z

[group]
# C m c 21; Hall C 2c -2; point order 4
id = 3/36
name = C m c 21
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z+1/2
op = -y,-x,z

[group]
# C c c 2; Hall C 2 -2c; point order 4
id = 3/37
name = C c c 2
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z
op = -y,-x,z+1/2

[group]
# A m m 2; Hall A 2 -2; point order 4
id = 3/38
name = A m m 2
gram = 2 0 0; 0 1 0; 0 0 1
op = -x,-z,-y
op = -x,y,z

[group]
# A b m 2; Hall A 2 -2b; point order 4
id = 3/39
name = A b m 2
gram = 2 0 0; 0 1 0; 0 0 1
op = -x,-z,-y
op = -x,y+1/2,z+1/2

[group]
# A m a 2; Hall A 2 -2a; point order 4
id = 3/40
name = A m a 2
gram = 2 0 0; 0 1 0; 0 0 1
op = -x,-z,-y
op = -x+1/2,y,z

[group]
# A b a 2; Hall A 2 -2ab; point order 4
id = 3/41
name = A b a 2
gram = 2 0 0; 0 1 0; 0 0 1
op = -x,-z,-y
op = -x+1/2,y+1/2,z+1/2

[group]
# F m m 2; Hall F 2 -2; point order 4
id = 3/42
name = F m m 2
gram = 2 1 1; 1 2 1; 1 1 2
op = y,x,-x-y-z
op = x+y+z,-z,-y

[group]
# F d d 2; Hall F 2 -2d; point order 4
id = 3/43
name = F d d 2
gram = 2 1 1; 1 2 1; 1 1 2
op = y,x,-x-y-z
op = x+y+z+1/4,-z+1/4,-y+1/4

[group]
# I m m 2; Hall I 2 -2; point order 4
id = 3/44
name = I m m 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z,x-z,-z
op = x,x-z,x-y

[group]
# I b a 2; Hall I 2 -2c; point order 4
id = 3/45
name = I b a 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z,x-z,-z
op = x+1/2,x-z+1/2,x-y

[group]
# I m a 2; Hall I 2 -2a; point order 4
id = 3/46
name = I m a 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z,x-z,-z
op = x,x-z+1/2,x-y+1/2

[group]
# P m m m; Hall -P 2 2; point order 8
id = 3/47
name = P m m m
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x,-y,-z
op = -x,-y,-z

[group]
# P n n n; Hall P 2 2 -1n; point order 8
id = 3/48
name = P n n n
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x,-y,-z
op = -x+1/2,-y+1/2,-z+1/2

[group]
# P c c m; Hall -P 2 2c; point order 8
id = 3/49
name = P c c m
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x,-y,-z+1/2
op = -x,-y,-z

[group]
# P b a n; Hall P 2 2 -1ab; point order 8
id = 3/50
name = P b a n
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x,-y,-z
op = -x+1/2,-y+1/2,-z

[group]
# P m m a; Hall -P 2a 2a; point order 8
id = 3/51
name = P m m a
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z
op = x+1/2,-y,-z
op = -x,-y,-z

[group]
# P n n a; Hall -P 2a 2bc; point order 8
id = 3/52
name = P n n a
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z
op = x,-y+1/2,-z+1/2
op = -x,-y,-z

[group]
# P m n a; Hall -P 2ac 2; point order 8
id = 3/53
name = P m n a
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z+1/2
op = x,-y,-z
op = -x,-y,-z

[group]
# P c c a; Hall -P 2a 2ac; point order 8
id = 3/54
name = P c c a
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z
op = x+1/2,-y,-z+1/2
op = -x,-y,-z

[group]
# P b a m; Hall -P 2 2ab; point order 8
id = 3/55
name = P b a m
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x+1/2,-y+1/2,-z
op = -x,-y,-z

[group]
# P c c n; Hall -P 2ab 2ac; point order 8
id = 3/56
name = P c c n
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y+1/2,z
op = x+1/2,-y,-z+1/2
op = -x,-y,-z

[group]
# P b c m; Hall -P 2c 2b; point order 8
id = 3/57
name = P b c m
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z+1/2
op = x,-y+1/2,-z
op = -x,-y,-z

[group]
# P n n m; Hall -P 2 2n; point order 8
id = 3/58
name = P n n m
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x+1/2,-y+1/2,-z+1/2
op = -x,-y,-z

[group]
# P m m n; Hall P 2 2ab -1ab; point order 8
id = 3/59
name = P m m n
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x+1/2,-y+1/2,-z
op = -x+1/2,-y+1/2,-z

[group]
# P b c n; Hall -P 2n 2ab; point order 8
id = 3/60
name = P b c n
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y+1/2,z+1/2
op = x+1/2,-y+1/2,-z
op = -x,-y,-z

[group]
# P b c a; Hall -P 2ac 2ab; point order 8
id = 3/61
name = P b c a
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z+1/2
op = x+1/2,-y+1/2,-z
op = -x,-y,-z

[group]
# P n m a; Hall -P 2ac 2n; point order 8
id = 3/62
name = P n m a
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z+1/2
op = x+1/2,-y+1/2,-z+1/2
op = -x,-y,-z

[group]
# C m c m; Hall -C 2c 2; point order 8
id = 3/63
name = C m c m
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z+1/2
op = y,x,-z
op = -x,-y,-z

[group]
# C m c a; Hall -C 2ac 2; point order 8
id = 3/64
name = C m c a
gram = 1 0 0; 0 1 0; 0 0 2
op = -x+1/2,-y+1/2,z+1/2
op = y,x,-z
op = -x,-y,-z

[group]
# C m m m; Hall -C 2 2; point order 8
id = 3/65
name = C m m m
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z
op = y,x,-z
op = -x,-y,-z

[group]
# C c c m; Hall -C 2 2c; point order 8
id = 3/66
name = C c c m
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z
op = y,x,-z+1/2
op = -x,-y,-z

[group]
# C m m a; Hall -C 2a 2; point order 8
id = 3/67
name = C m m a
gram = 1 0 0; 0 1 0; 0 0 2
op = -x+1/2,-y+1/2,z
op = y,x,-z
op = -x,-y,-z

[group]
# C c c a; Hall C 2 2 -1ac; point order 8
id = 3/68
name = C c c a
gram = 1 0 0; 0 1 0; 0 0 2
op = -x,-y,z
op = y,x,-z
op = -x+1/2,-y+1/2,-z+1/2

[group]
# F m m m; Hall -F 2 2; point order 8
id = 3/69
name = F m m m
gram = 2 1 1; 1 2 1; 1 1 2
op = y,x,-x-y-z
op = -x-y-z,z,y
op = -x,-y,-z

[group]
# F d d d; Hall F 2 2 -1d; point order 8
id = 3/70
name = F d d d
gram = 2 1 1; 1 2 1; 1 1 2
op = y,x,-x-y-z
op = -x-y-z,z,y
op = -x+1/4,-y+1/4,-z+1/4

[group]
# I m m m; Hall -I 2 2; point order 8
id = 3/71
name = I m m m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z,x-z,-z
op = -x,-x+z,-x+y
op = -x,-y,-z

[group]
# I b a m; Hall -I 2 2c; point order 8
id = 3/72
name = I b a m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z,x-z,-z
op = -x+1/2,-x+z+1/2,-x+y
op = -x,-y,-z

[group]
# I b c a; Hall -I 2b 2c; point order 8
id = 3/73
name = I b c a
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z+1/2,x-z,-z+1/2
op = -x+1/2,-x+z+1/2,-x+y
op = -x,-y,-z

[group]
# I m m a; Hall -I 2b 2; point order 8
id = 3/74
name = I m m a
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z+1/2,x-z,-z+1/2
op = -x,-x+z,-x+y
op = -x,-y,-z

[group]
# P 4; Hall P 4; point order 4
id = 3/75
name = P 4
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z

[group]
# P 41; Hall P 4w; point order 4
id = 3/76
name = P 41
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/4

[group]
# P 42; Hall P 4c; point order 4
id = 3/77
name = P 42
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2

[group]
# I 4; Hall I 4; point order 4
id = 3/79
name = I 4
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y

[group]
# I 41; Hall I 4bw; point order 4
id = 3/80
name = I 41
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y+3/4,y-z+1/4,-x+y+1/2

[group]
# P -4; Hall P -4; point order 4
id = 3/81
name = P -4
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z

[group]
# I -4; Hall I -4; point order 4
id = 3/82
name = I -4
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = -y,-y+z,x-y

[group]
# P 4/m; Hall -P 4; point order 8
id = 3/83
name = P 4/m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = -x,-y,-z

[group]
# P 42/m; Hall -P 4c; point order 8
id = 3/84
name = P 42/m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2
op = -x,-y,-z

[group]
# P 4/n; Hall P 4ab -1ab; point order 8
id = 3/85
name = P 4/n
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z
op = -x+1/2,-y+1/2,-z

[group]
# P 42/n; Hall P 4n -1n; point order 8
id = 3/86
name = P 42/n
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = -x+1/2,-y+1/2,-z+1/2

[group]
# I 4/m; Hall -I 4; point order 8
id = 3/87
name = I 4/m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y
op = -x,-y,-z

[group]
# I 41/a; Hall I 4bw -1bw; point order 8
id = 3/88
name = I 41/a
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y+3/4,y-z+1/4,-x+y+1/2
op = -x+3/4,-y+1/4,-z+1/2

[group]
# P 4 2 2; Hall P 4 2; point order 8
id = 3/89
name = P 4 2 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x,-y,-z

[group]
# P 4 21 2; Hall P 4ab 2ab; point order 8
id = 3/90
name = P 4 21 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z
op = x+1/2,-y+1/2,-z

[group]
# P 41 2 2; Hall P 4w 2c; point order 8
id = 3/91
name = P 41 2 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/4
op = x,-y,-z+1/2

[group]
# P 41 21 2; Hall P 4abw 2nw; point order 8
id = 3/92
name = P 41 21 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/4
op = x+1/2,-y+1/2,-z+3/4

[group]
# P 42 2 2; Hall P 4c 2; point order 8
id = 3/93
name = P 42 2 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2
op = x,-y,-z

[group]
# P 42 21 2; Hall P 4n 2n; point order 8
id = 3/94
name = P 42 21 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x+1/2,-y+1/2,-z+1/2

[group]
# I 4 2 2; Hall I 4 2; point order 8
id = 3/97
name = I 4 2 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y
op = -x,-x+z,-x+y

[group]
# I 41 2 2; Hall I 4bw 2bw; point order 8
id = 3/98
name = I 41 2 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y+3/4,y-z+1/4,-x+y+1/2
op = -x+3/4,-x+z+1/4,-x+y+1/2

[group]
# P 4 m m; Hall P 4 -2; point order 8
id = 3/99
name = P 4 m m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = -x,y,z

[group]
# P 4 b m; Hall P 4 -2ab; point order 8
id = 3/100
name = P 4 b m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = -x+1/2,y+1/2,z

[group]
# P 42 c m; Hall P 4c -2c; point order 8
id = 3/101
name = P 42 c m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2
op = -x,y,z+1/2

[group]
# P 42 n m; Hall P 4n -2n; point order 8
id = 3/102
name = P 42 n m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = -x+1/2,y+1/2,z+1/2

[group]
# P 4 c c; Hall P 4 -2c; point order 8
id = 3/103
name = P 4 c c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = -x,y,z+1/2

[group]
# P 4 n c; Hall P 4 -2n; point order 8
id = 3/104
name = P 4 n c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = -x+1/2,y+1/2,z+1/2

[group]
# P 42 m c; Hall P 4c -2; point order 8
id = 3/105
name = P 42 m c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2
op = -x,y,z

[group]
# P 42 b c; Hall P 4c -2ab; point order 8
id = 3/106
name = P 42 b c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2
op = -x+1/2,y+1/2,z

[group]
# I 4 m m; Hall I 4 -2; point order 8
id = 3/107
name = I 4 m m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y
op = x,x-z,x-y

[group]
# I 4 c m; Hall I 4 -2c; point order 8
id = 3/108
name = I 4 c m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y
op = x+1/2,x-z+1/2,x-y

[group]
# I 41 m d; Hall I 4bw -2; point order 8
id = 3/109
name = I 41 m d
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y+3/4,y-z+1/4,-x+y+1/2
op = x,x-z,x-y

[group]
# I 41 c d; Hall I 4bw -2c; point order 8
id = 3/110
name = I 41 c d
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y+3/4,y-z+1/4,-x+y+1/2
op = x+1/2,x-z+1/2,x-y

[group]
# P -4 2 m; Hall P -4 2; point order 8
id = 3/111
name = P -4 2 m
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z
op = x,-y,-z

[group]
# P -4 2 c; Hall P -4 2c; point order 8
id = 3/112
name = P -4 2 c
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z
op = x,-y,-z+1/2

[group]
# P -4 21 m; Hall P -4 2ab; point order 8
id = 3/113
name = P -4 21 m
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y+1/2,z
op = y+1/2,-x,-z
op = -x,y+1/2,-z

[group]
# P -4 21 c; Hall P -4 2n; point order 8
id = 3/114
name = P -4 21 c
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z
op = x+1/2,-y+1/2,-z+1/2

[group]
# P -4 m 2; Hall P -4 -2; point order 8
id = 3/115
name = P -4 m 2
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z
op = -x,y,z

[group]
# P -4 c 2; Hall P -4 -2c; point order 8
id = 3/116
name = P -4 c 2
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z
op = -x,y,z+1/2

[group]
# P -4 b 2; Hall P -4 -2ab; point order 8
id = 3/117
name = P -4 b 2
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z
op = -x+1/2,y+1/2,z

[group]
# P -4 n 2; Hall P -4 -2n; point order 8
id = 3/118
name = P -4 n 2
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z
op = -x+1/2,y+1/2,z+1/2

[group]
# I -4 m 2; Hall I -4 -2; point order 8
id = 3/119
name = I -4 m 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = -y,-y+z,x-y
op = x,x-z,x-y

[group]
# I -4 c 2; Hall I -4 -2c; point order 8
id = 3/120
name = I -4 c 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = -y,-y+z,x-y
op = x+1/2,x-z+1/2,x-y

[group]
# I -4 2 m; Hall I -4 2; point order 8
id = 3/121
name = I -4 2 m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = -y,-y+z,x-y
op = -x,-x+z,-x+y

[group]
# I -4 2 d; Hall I -4 2bw; point order 8
id = 3/122
name = I -4 2 d
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = -y,-y+z,x-y
op = -x+3/4,-x+z+1/4,-x+y+1/2

[group]
# P 4/m m m; Hall -P 4 2; point order 16
id = 3/123
name = P 4/m m m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x,-y,-z
op = -x,-y,-z

[group]
# P 4/m c c; Hall -P 4 2c; point order 16
id = 3/124
name = P 4/m c c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x,-y,-z+1/2
op = -x,-y,-z

[group]
# P 4/n b m; Hall P 4 2 -1ab; point order 16
id = 3/125
name = P 4/n b m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x,-y,-z
op = -x+1/2,-y+1/2,-z

[group]
# P 4/n n c; Hall P 4 2 -1n; point order 16
id = 3/126
name = P 4/n n c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x,-y,-z
op = -x+1/2,-y+1/2,-z+1/2

[group]
# P 4/m b m; Hall -P 4 2ab; point order 16
id = 3/127
name = P 4/m b m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x+1/2,-y+1/2,-z
op = -x,-y,-z

[group]
# P 4/m n c; Hall -P 4 2n; point order 16
id = 3/128
name = P 4/m n c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x+1/2,-y+1/2,-z+1/2
op = -x,-y,-z

[group]
# P 4/n m m; Hall P 4ab 2ab -1ab; point order 16
id = 3/129
name = P 4/n m m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z
op = x+1/2,-y+1/2,-z
op = -x+1/2,-y+1/2,-z

[group]
# P 4/n c c; Hall P 4ab 2n -1ab; point order 16
id = 3/130
name = P 4/n c c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z
op = x+1/2,-y+1/2,-z+1/2
op = -x+1/2,-y+1/2,-z

[group]
# P 42/m m c; Hall -P 4c 2; point order 16
id = 3/131
name = P 42/m m c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2
op = x,-y,-z
op = -x,-y,-z

[group]
# P 42/m c m; Hall -P 4c 2c; point order 16
id = 3/132
name = P 42/m c m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2
op = x,-y,-z+1/2
op = -x,-y,-z

[group]
# P 42/n b c; Hall P 4n 2c -1n; point order 16
id = 3/133
name = P 42/n b c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x,-y,-z+1/2
op = -x+1/2,-y+1/2,-z+1/2

[group]
# P 42/n n m; Hall P 4n 2 -1n; point order 16
id = 3/134
name = P 42/n n m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x,-y,-z
op = -x+1/2,-y+1/2,-z+1/2

[group]
# P 42/m b c; Hall -P 4c 2ab; point order 16
id = 3/135
name = P 42/m b c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z+1/2
op = x+1/2,-y+1/2,-z
op = -x,-y,-z

[group]
# P 42/m n m; Hall -P 4n 2n; point order 16
id = 3/136
name = P 42/m n m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x+1/2,-y+1/2,-z+1/2
op = -x,-y,-z

[group]
# P 42/n m c; Hall P 4n 2n -1n; point order 16
id = 3/137
name = P 42/n m c
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x+1/2,-y+1/2,-z+1/2
op = -x+1/2,-y+1/2,-z+1/2

[group]
# P 42/n c m; Hall P 4n 2ab -1n; point order 16
id = 3/138
name = P 42/n c m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x+1/2,-y+1/2,-z
op = -x+1/2,-y+1/2,-z+1/2

[group]
# I 4/m m m; Hall -I 4 2; point order 16
id = 3/139
name = I 4/m m m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y
op = -x,-x+z,-x+y
op = -x,-y,-z

[group]
# I 4/m c m; Hall -I 4 2c; point order 16
id = 3/140
name = I 4/m c m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y
op = -x+1/2,-x+z+1/2,-x+y
op = -x,-y,-z

[group]
# I 41/a m d; Hall I 4bw 2bw -1bw; point order 16
id = 3/141
name = I 41/a m d
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y+3/4,y-z+1/4,-x+y+1/2
op = -x+3/4,-x+z+1/4,-x+y+1/2
op = -x+3/4,-y+1/4,-z+1/2

[group]
# I 41/a c d; Hall I 4bw 2aw -1bw; point order 16
id = 3/142
name = I 41/a c d
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y+3/4,y-z+1/4,-x+y+1/2
op = -x+1/4,-x+z+3/4,-x+y+1/2
op = -x+3/4,-y+1/4,-z+1/2

[group]
# P 3; Hall P 3; point order 3
id = 3/143
name = P 3
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z

[group]
# P 31; Hall P 31; point order 3
id = 3/144
name = P 31
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z+1/3

[group]
# R 3; Hall R 3; point order 3
id = 3/146
name = R 3
gram = 8 -1 -1; -1 8 -1; -1 -1 8
op = z,x,y

[group]
# P -3; Hall -P 3; point order 6
id = 3/147
name = P -3
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = -x,-y,-z

[group]
# R -3; Hall -R 3; point order 6
id = 3/148
name = R -3
gram = 8 -1 -1; -1 8 -1; -1 -1 8
op = z,x,y
op = -x,-y,-z

[group]
# P 3 1 2; Hall P 3 2; point order 6
id = 3/149
name = P 3 1 2
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = -y,-x,-z

[group]
# P 3 2 1; Hall P 3 2"; point order 6
id = 3/150
name = P 3 2 1
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = y,x,-z

[group]
# P 31 1 2; Hall P 31 2 (0 0 4); point order 6
id = 3/151
name = P 31 1 2
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z+1/3
op = -y,-x,-z+2/3

[group]
# P 31 2 1; Hall P 31 2"; point order 6
id = 3/152
name = P 31 2 1
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z+1/3
op = y,x,-z

[group]
# R 3 2; Hall R 3 2"; point order 6
id = 3/155
name = R 3 2
gram = 8 -1 -1; -1 8 -1; -1 -1 8
op = z,x,y
op = -z,-y,-x

[group]
# P 3 m 1; Hall P 3 -2"; point order 6
id = 3/156
name = P 3 m 1
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = -y,-x,z

[group]
# P 3 1 m; Hall P 3 -2; point order 6
id = 3/157
name = P 3 1 m
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = y,x,z

[group]
# P 3 c 1; Hall P 3 -2"c; point order 6
id = 3/158
name = P 3 c 1
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = -y,-x,z+1/2

[group]
# P 3 1 c; Hall P 3 -2c; point order 6
id = 3/159
name = P 3 1 c
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = y,x,z+1/2

[group]
# R 3 m; Hall R 3 -2"; point order 6
id = 3/160
name = R 3 m
gram = 8 -1 -1; -1 8 -1; -1 -1 8
op = z,x,y
op = z,y,x

[group]
# R 3 c; Hall R 3 -2"c; point order 6
id = 3/161
name = R 3 c
gram = 8 -1 -1; -1 8 -1; -1 -1 8
op = z,x,y
op = z+1/2,y+1/2,x+1/2

[group]
# P -3 1 m; Hall -P 3 2; point order 12
id = 3/162
name = P -3 1 m
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = -y,-x,-z
op = -x,-y,-z

[group]
# P -3 1 c; Hall -P 3 2c; point order 12
id = 3/163
name = P -3 1 c
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = -y,-x,-z+1/2
op = -x,-y,-z

[group]
# P -3 m 1; Hall -P 3 2"; point order 12
id = 3/164
name = P -3 m 1
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = y,x,-z
op = -x,-y,-z

[group]
# P -3 c 1; Hall -P 3 2"c; point order 12
id = 3/165
name = P -3 c 1
gram = 2 -1 0; -1 2 0; 0 0 2
op = -y,x-y,z
op = y,x,-z+1/2
op = -x,-y,-z

[group]
# R -3 m; Hall -R 3 2"; point order 12
id = 3/166
name = R -3 m
gram = 8 -1 -1; -1 8 -1; -1 -1 8
op = z,x,y
op = -z,-y,-x
op = -x,-y,-z

[group]
# R -3 c; Hall -R 3 2"c; point order 12
id = 3/167
name = R -3 c
gram = 8 -1 -1; -1 8 -1; -1 -1 8
op = z,x,y
op = -z+1/2,-y+1/2,-x+1/2
op = -x,-y,-z

[group]
# P 6; Hall P 6; point order 6
id = 3/168
name = P 6
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z

[group]
# P 61; Hall P 61; point order 6
id = 3/169
name = P 61
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/6

[group]
# P 62; Hall P 62; point order 6
id = 3/171
name = P 62
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/3

[group]
# P 63; Hall P 6c; point order 6
id = 3/173
name = P 63
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/2

[group]
# P -6; Hall P -6; point order 6
id = 3/174
name = P -6
gram = 2 -1 0; -1 2 0; 0 0 2
op = -x+y,-x,-z

[group]
# P 6/m; Hall -P 6; point order 12
id = 3/175
name = P 6/m
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z
op = -x,-y,-z

[group]
# P 63/m; Hall -P 6c; point order 12
id = 3/176
name = P 63/m
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/2
op = -x,-y,-z

[group]
# P 6 2 2; Hall P 6 2; point order 12
id = 3/177
name = P 6 2 2
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z
op = -y,-x,-z

[group]
# P 61 2 2; Hall P 61 2 (0 0 5); point order 12
id = 3/178
name = P 61 2 2
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/6
op = -y,-x,-z+5/6

[group]
# P 62 2 2; Hall P 62 2 (0 0 4); point order 12
id = 3/180
name = P 62 2 2
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/3
op = -y,-x,-z+2/3

[group]
# P 63 2 2; Hall P 6c 2c; point order 12
id = 3/182
name = P 63 2 2
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/2
op = -y,-x,-z+1/2

[group]
# P 6 m m; Hall P 6 -2; point order 12
id = 3/183
name = P 6 m m
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z
op = y,x,z

[group]
# P 6 c c; Hall P 6 -2c; point order 12
id = 3/184
name = P 6 c c
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z
op = y,x,z+1/2

[group]
# P 63 c m; Hall P 6c -2; point order 12
id = 3/185
name = P 63 c m
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/2
op = y,x,z

[group]
# P 63 m c; Hall P 6c -2c; point order 12
id = 3/186
name = P 63 m c
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/2
op = y,x,z+1/2

[group]
# P -6 m 2; Hall P -6 2; point order 12
id = 3/187
name = P -6 m 2
gram = 2 -1 0; -1 2 0; 0 0 2
op = -x+y,-x,-z
op = -y,-x,-z

[group]
# P -6 c 2; Hall P -6c 2; point order 12
id = 3/188
name = P -6 c 2
gram = 2 -1 0; -1 2 0; 0 0 2
op = -x+y,-x,-z+1/2
op = -y,-x,-z

[group]
# P -6 2 m; Hall P -6 -2; point order 12
id = 3/189
name = P -6 2 m
gram = 2 -1 0; -1 2 0; 0 0 2
op = -x+y,-x,-z
op = y,x,z

[group]
# P -6 2 c; Hall P -6c -2c; point order 12
id = 3/190
name = P -6 2 c
gram = 2 -1 0; -1 2 0; 0 0 2
op = -x+y,-x,-z+1/2
op = y,x,z+1/2

[group]
# P 6/m m m; Hall -P 6 2; point order 24
id = 3/191
name = P 6/m m m
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z
op = -y,-x,-z
op = -x,-y,-z

[group]
# P 6/m c c; Hall -P 6 2c; point order 24
id = 3/192
name = P 6/m c c
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z
op = -y,-x,-z+1/2
op = -x,-y,-z

[group]
# P 63/m c m; Hall -P 6c 2; point order 24
id = 3/193
name = P 63/m c m
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/2
op = -y,-x,-z
op = -x,-y,-z

[group]
# P 63/m m c; Hall -P 6c 2c; point order 24
id = 3/194
name = P 63/m m c
gram = 2 -1 0; -1 2 0; 0 0 2
op = x-y,x,z+1/2
op = -y,-x,-z+1/2
op = -x,-y,-z

[group]
# P 2 3; Hall P 2 2 3; point order 12
id = 3/195
name = P 2 3
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x,-y,-z
op = z,x,y

[group]
# F 2 3; Hall F 2 2 3; point order 12
id = 3/196
name = F 2 3
gram = 2 1 1; 1 2 1; 1 1 2
op = y,x,-x-y-z
op = -x-y-z,z,y
op = z,x,y

[group]
# I 2 3; Hall I 2 2 3; point order 12
id = 3/197
name = I 2 3
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z,x-z,-z
op = -x,-x+z,-x+y
op = z,x,y

[group]
# P 21 3; Hall P 2ac 2ab 3; point order 12
id = 3/198
name = P 21 3
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z+1/2
op = x+1/2,-y+1/2,-z
op = z,x,y

[group]
# I 21 3; Hall I 2b 2c 3; point order 12
id = 3/199
name = I 21 3
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z+1/2,x-z,-z+1/2
op = -x+1/2,-x+z+1/2,-x+y
op = z,x,y

[group]
# P m -3; Hall -P 2 2 3; point order 24
id = 3/200
name = P m -3
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x,-y,-z
op = z,x,y
op = -x,-y,-z

[group]
# P n -3; Hall P 2 2 3 -1n; point order 24
id = 3/201
name = P n -3
gram = 1 0 0; 0 1 0; 0 0 1
op = -x,-y,z
op = x,-y,-z
op = z,x,y
op = -x+1/2,-y+1/2,-z+1/2

[group]
# F m -3; Hall -F 2 2 3; point order 24
id = 3/202
name = F m -3
gram = 2 1 1; 1 2 1; 1 1 2
op = y,x,-x-y-z
op = -x-y-z,z,y
op = z,x,y
op = -x,-y,-z

[group]
# F d -3; Hall F 2 2 3 -1d; point order 24
id = 3/203
name = F d -3
gram = 2 1 1; 1 2 1; 1 1 2
op = y,x,-x-y-z
op = -x-y-z,z,y
op = z,x,y
op = -x+1/4,-y+1/4,-z+1/4

[group]
# I m -3; Hall -I 2 2 3; point order 24
id = 3/204
name = I m -3
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z,x-z,-z
op = -x,-x+z,-x+y
op = z,x,y
op = -x,-y,-z

[group]
# P a -3; Hall -P 2ac 2ab 3; point order 24
id = 3/205
name = P a -3
gram = 1 0 0; 0 1 0; 0 0 1
op = -x+1/2,-y,z+1/2
op = x+1/2,-y+1/2,-z
op = z,x,y
op = -x,-y,-z

[group]
# I a -3; Hall -I 2b 2c 3; point order 24
id = 3/206
name = I a -3
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y-z+1/2,x-z,-z+1/2
op = -x+1/2,-x+z+1/2,-x+y
op = z,x,y
op = -x,-y,-z

[group]
# P 4 3 2; Hall P 4 2 3; point order 24
id = 3/207
name = P 4 3 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x,-y,-z
op = z,x,y

[group]
# P 42 3 2; Hall P 4n 2 3; point order 24
id = 3/208
name = P 42 3 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x,-y,-z
op = z,x,y

[group]
# F 4 3 2; Hall F 4 2 3; point order 24
id = 3/209
name = F 4 3 2
gram = 2 1 1; 1 2 1; 1 1 2
op = x+y+z,-z,-x
op = -x-y-z,z,y
op = z,x,y

[group]
# F 41 3 2; Hall F 4d 2 3; point order 24
id = 3/210
name = F 41 3 2
gram = 2 1 1; 1 2 1; 1 1 2
op = x+y+z+1/4,-z+1/4,-x+1/4
op = -x-y-z,z,y
op = z,x,y

[group]
# I 4 3 2; Hall I 4 2 3; point order 24
id = 3/211
name = I 4 3 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y
op = -x,-x+z,-x+y
op = z,x,y

[group]
# P 43 3 2; Hall P 4acd 2ab 3; point order 24
id = 3/212
name = P 43 3 2
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+3/4,x+1/4,z+3/4
op = x+1/2,-y+1/2,-z
op = z,x,y

[group]
# I 41 3 2; Hall I 4bd 2c 3; point order 24
id = 3/214
name = I 41 3 2
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z+1/2,-x+y
op = -x+1/2,-x+z+1/2,-x+y
op = z,x,y

[group]
# P -4 3 m; Hall P -4 2 3; point order 24
id = 3/215
name = P -4 3 m
gram = 1 0 0; 0 1 0; 0 0 1
op = y,-x,-z
op = x,-y,-z
op = z,x,y

[group]
# F -4 3 m; Hall F -4 2 3; point order 24
id = 3/216
name = F -4 3 m
gram = 2 1 1; 1 2 1; 1 1 2
op = -x-y-z,z,x
op = -x-y-z,z,y
op = z,x,y

[group]
# I -4 3 m; Hall I -4 2 3; point order 24
id = 3/217
name = I -4 3 m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = -y,-y+z,x-y
op = -x,-x+z,-x+y
op = z,x,y

[group]
# P -4 3 n; Hall P -4n 2 3; point order 24
id = 3/218
name = P -4 3 n
gram = 1 0 0; 0 1 0; 0 0 1
op = y+1/2,-x+1/2,-z+1/2
op = x,-y,-z
op = z,x,y

[group]
# F -4 3 c; Hall F -4a 2 3; point order 24
id = 3/219
name = F -4 3 c
gram = 2 1 1; 1 2 1; 1 1 2
op = -x-y-z+1/2,z+1/2,x+1/2
op = -x-y-z,z,y
op = z,x,y

[group]
# I -4 3 d; Hall I -4bd 2c 3; point order 24
id = 3/220
name = I -4 3 d
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = -y,-y+z+1/2,x-y
op = -x+1/2,-x+z+1/2,-x+y
op = z,x,y

[group]
# P m -3 m; Hall -P 4 2 3; point order 48
id = 3/221
name = P m -3 m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x,-y,-z
op = z,x,y
op = -x,-y,-z

[group]
# P n -3 n; Hall P 4 2 3 -1n; point order 48
id = 3/222
name = P n -3 n
gram = 1 0 0; 0 1 0; 0 0 1
op = -y,x,z
op = x,-y,-z
op = z,x,y
op = -x+1/2,-y+1/2,-z+1/2

[group]
# P m -3 n; Hall -P 4n 2 3; point order 48
id = 3/223
name = P m -3 n
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x,-y,-z
op = z,x,y
op = -x,-y,-z

[group]
# P n -3 m; Hall P 4n 2 3 -1n; point order 48
id = 3/224
name = P n -3 m
gram = 1 0 0; 0 1 0; 0 0 1
op = -y+1/2,x+1/2,z+1/2
op = x,-y,-z
op = z,x,y
op = -x+1/2,-y+1/2,-z+1/2

[group]
# F m -3 m; Hall -F 4 2 3; point order 48
id = 3/225
name = F m -3 m
gram = 2 1 1; 1 2 1; 1 1 2
op = x+y+z,-z,-x
op = -x-y-z,z,y
op = z,x,y
op = -x,-y,-z

[group]
# F m -3 c; Hall -F 4a 2 3; point order 48
id = 3/226
name = F m -3 c
gram = 2 1 1; 1 2 1; 1 1 2
op = x+y+z+1/2,-z+1/2,-x+1/2
op = -x-y-z,z,y
op = z,x,y
op = -x,-y,-z

[group]
# F d -3 m; Hall F 4d 2 3 -1d; point order 48
id = 3/227
name = F d -3 m
gram = 2 1 1; 1 2 1; 1 1 2
op = x+y+z+1/4,-z+1/4,-x+1/4
op = -x-y-z,z,y
op = z,x,y
op = -x+1/4,-y+1/4,-z+1/4

[group]
# F d -3 c; Hall F 4d 2 3 -1ad; point order 48
id = 3/228
name = F d -3 c
gram = 2 1 1; 1 2 1; 1 1 2
op = x+y+z+1/4,-z+1/4,-x+1/4
op = -x-y-z,z,y
op = z,x,y
op = -x+3/4,-y+3/4,-z+3/4

[group]
# I m -3 m; Hall -I 4 2 3; point order 48
id = 3/229
name = I m -3 m
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z,-x+y
op = -x,-x+z,-x+y
op = z,x,y
op = -x,-y,-z

[group]
# I a -3 d; Hall -I 4bd 2c 3; point order 48
id = 3/230
name = I a -3 d
gram = 3 -1 -1; -1 3 -1; -1 -1 3
op = y,y-z+1/2,-x+y
op = -x+1/2,-x+z+1/2,-x+y
op = z,x,y
op = -x,-y,-z

)CAT";
}

}  // namespace crystfib
