#include "catalog.hpp"

// Embedded copies of the table files shipped under data/; kept byte-identical
// so other implementations can diff against the files directly.

namespace cubicfolds::catalog {

std::string_view golden_204_text() {
    static constexpr std::string_view text = R"txt(# Complete list of singularity configurations on cubic threefolds.
# One row per line: index;mu;k;configuration
# Indices 1-18: worst singularity of corank >= 3.
# Indices 19-95: worst singularity of corank 2 with nonzero third jet.
# Indices 96-204: constellations of A_n singularities.
1;16;1;O16
2;12;1;U12
3;11;1;S11
4;11;1;T444
5;10;1;Q10
6;10;1;T344
7;9;1;T334
8;8;1;P8
9;13;1;T266
10;12;1;T256
11;12;2;T246+A1
12;11;1;T255
13;11;1;T246
14;11;2;T245+A1
15;11;3;X9+2A1
16;10;1;T245
17;10;2;X9+A1
18;9;1;X9
19;12;2;J10+A2
20;11;2;J10+A1
21;10;1;J10
22;10;2;E8+A2
23;9;2;E8+A1
24;8;1;E8
25;10;3;E7+A2+A1
26;9;2;E7+A2
27;9;3;E7+2A1
28;8;2;E7+A1
29;7;1;E7
30;10;3;E6+2A2
31;9;3;E6+A2+A1
32;8;2;E6+A2
33;8;3;E6+2A1
34;7;2;E6+A1
35;6;1;E6
36;11;2;D8+A3
37;10;2;D8+A2
38;10;3;D8+2A1
39;9;2;D8+A1
40;8;1;D8
41;10;2;D7+A3
42;9;2;D7+A2
43;9;3;D7+2A1
44;8;2;D7+A1
45;7;1;D7
46;11;4;D6+A3+2A1
47;10;3;D6+A3+A1
48;9;2;D6+A3
49;10;4;D6+A2+2A1
50;9;3;D6+A2+A1
51;8;2;D6+A2
52;10;5;D6+4A1
53;9;4;D6+3A1
54;8;3;D6+2A1
55;7;2;D6+A1
56;6;1;D6
57;11;3;D5+2A3
58;10;3;D5+A3+A2
59;10;4;D5+A3+2A1
60;9;3;D5+A3+A1
61;8;2;D5+A3
62;9;3;D5+2A2
63;9;4;D5+A2+2A1
64;8;3;D5+A2+A1
65;7;2;D5+A2
66;9;5;D5+4A1
67;8;4;D5+3A1
68;7;3;D5+2A1
69;6;2;D5+A1
70;5;1;D5
71;12;3;3D4
72;11;3;2D4+A3
73;10;3;2D4+A2
74;11;5;2D4+3A1
75;10;4;2D4+2A1
76;9;3;2D4+A1
77;8;2;2D4
78;10;3;D4+2A3
79;9;3;D4+A3+A2
80;10;5;D4+A3+3A1
81;9;4;D4+A3+2A1
82;8;3;D4+A3+A1
83;7;2;D4+A3
84;8;3;D4+2A2
85;9;5;D4+A2+3A1
86;8;4;D4+A2+2A1
87;7;3;D4+A2+A1
88;6;2;D4+A2
89;10;7;D4+6A1
90;9;6;D4+5A1
91;8;5;D4+4A1
92;7;4;D4+3A1
93;6;3;D4+2A1
94;5;2;D4+A1
95;4;1;D4
96;11;1;A11
97;10;1;A10
98;10;2;A9+A1
99;9;1;A9
100;10;2;A8+A2
101;9;2;A8+A1
102;8;1;A8
103;11;2;A7+A4
104;10;2;A7+A3
105;10;3;A7+A2+A1
106;9;2;A7+A2
107;9;3;A7+2A1
108;8;2;A7+A1
109;7;1;A7
110;10;2;A6+A4
111;9;2;A6+A3
112;9;3;A6+A2+A1
113;8;2;A6+A2
114;8;3;A6+2A1
115;7;2;A6+A1
116;6;1;A6
117;11;3;2A5+A1
118;10;2;2A5
119;10;3;A5+A4+A1
120;10;4;A5+A3+2A1
121;10;4;A5+2A2+A1
122;9;2;A5+A4
123;9;3;A5+A3+A1
124;9;3;A5+2A2
125;9;4;A5+A2+2A1
126;9;5;A5+4A1
127;8;2;A5+A3
128;8;3;A5+A2+A1
129;8;4;A5+3A1
130;7;2;A5+A2
131;7;3;A5+2A1
132;6;2;A5+A1
133;5;1;A5
134;10;3;2A4+A2
135;10;3;A4+2A3
136;9;3;2A4+A1
137;9;3;A4+A3+A2
138;9;4;A4+2A2+A1
139;9;4;A4+A3+2A1
140;8;2;2A4
141;8;3;A4+A3+A1
142;8;3;A4+2A2
143;8;4;A4+A2+2A1
144;8;5;A4+4A1
145;7;2;A4+A3
146;7;3;A4+A2+A1
147;7;4;A4+3A1
148;6;2;A4+A2
149;6;3;A4+2A1
150;5;2;A4+A1
151;4;1;A4
152;10;4;3A3+A1
153;10;5;2A3+A2+2A1
154;10;6;2A3+4A1
155;9;3;3A3
156;9;4;2A3+A2+A1
157;9;5;A3+2A2+2A1
158;9;5;2A3+3A1
159;9;6;A3+A2+4A1
160;9;7;A3+6A1
161;8;3;2A3+A2
162;8;4;A3+2A2+A1
163;8;4;2A3+2A1
164;8;5;A3+A2+3A1
165;8;6;A3+5A1
166;7;3;2A3+A1
167;7;3;A3+2A2
168;7;4;A3+A2+2A1
169;7;5;A3+4A1
170;6;2;2A3
171;6;3;A3+A2+A1
172;6;4;A3+3A1
173;5;2;A3+A2
174;5;3;A3+2A1
175;4;2;A3+A1
176;3;1;A3
177;10;5;5A2
178;9;5;4A2+A1
179;8;4;4A2
180;8;5;3A2+2A1
181;8;6;2A2+4A1
182;8;7;A2+6A1
183;7;4;3A2+A1
184;7;5;2A2+3A1
185;7;6;A2+5A1
186;6;3;3A2
187;6;4;2A2+2A1
188;6;5;A2+4A1
189;5;3;2A2+A1
190;5;4;A2+3A1
191;4;2;2A2
192;4;3;A2+2A1
193;3;2;A2+A1
194;2;1;A2
195;10;10;10A1
196;9;9;9A1
197;8;8;8A1
198;7;7;7A1
199;6;6;6A1
200;5;5;5A1
201;4;4;4A1
202;3;3;3A1
203;2;2;2A1
204;1;1;A1
)txt";
    return text;
}

std::string_view table5_text() {
    static constexpr std::string_view text = R"txt(# Maximal ADE configurations realized as induced subgraphs of Gamma.
# One row per line: configuration;vertices to remove from Gamma
E8+A2;3,8,9,11,15
E7+A2+A1;3,4,8,9,15
E6+2A2;3,8,9,14,15
D8+A3;1,3,11,15
D6+A3+2A1;1,3,4,15
D5+2A3;1,3,14,15
3D4;1,3,5
A11;3,8,12,13
A7+A4;3,9,13,14
2A5+A1;2,3,9,14
)txt";
    return text;
}

std::string_view table8_edges_text() {
    static constexpr std::string_view text = R"txt(# Direct adjacencies of unimodal and E_n singularities, one arrow per line.
# Hyperbolic T(p,q,r) -> T(p',q',r') adjacencies for componentwise
# p'<=p, q'<=q, r'<=r are implied and not listed exhaustively.
E7 E6
E8 E7
P8 E6
X9 E7
J10 E8
T334 P8
T245 X9
T255 J10
T255 T245
T344 X9
T344 T334
T246 T245
T246 J10
T444 T344
T256 T246
T256 T255
Q10 T334
T266 T256
S11 Q10
S11 T344
S11 T245
U12 S11
U12 T444
U12 T255
)txt";
    return text;
}

std::string_view dpw_semisimple_text() {
    static constexpr std::string_view text = R"txt(# Singularities of 1-symmetric cubic threefolds, semisimple case.
# One row per line: weights;configuration;mu
[-8, -2, 1, 4, 16];S11;11
[-10, -4, 2, 5, 8];A7+A4;11
[-8, -2, 1, 4, 4];D5+2A3;11
[-8, -2, 1, 4, 7];D8+A3;11
[-5, -2, 1, 1, 4];D6+A3+2A1;11
[-2, -2, 1, 1, 4];X9+2A1;11
[-4, -1, 0, 2, 8];Q10;10
[-4, -1, 0, 2, 5];E8+A2;10
[-4, -1, 0, 2, 4];D7+A3;10
[-2, -2, 0, 1, 4];E6+2A2;10
[-2,-1,0,1,3];E7+A2+A1;10
[-2, -1, 0, 1, 2];2A5;10
[-2, 0, 0, 1, 4];U12;12
[-2, 0, 0, 1, 2];J10+A2;12
[-1, 0, 0, 0, 2];P8;8
[-1, 0, 0, 0, 1];2D4;8
# Degenerations of the starred weight systems (extra singular points).
[-2, -1, 0, 1, 2];2A5+A1;11
[-1, 0, 0, 0, 1];2D4+A1;9
[-1, 0, 0, 0, 1];2D4+2A1;10
[-1, 0, 0, 0, 1];2D4+A2;10
[-1, 0, 0, 0, 1];2D4+3A1;11
[-1, 0, 0, 0, 1];2D4+A3;11
[-1, 0, 0, 0, 1];3D4;12
)txt";
    return text;
}

std::string_view dpw_unipotent_text() {
    static constexpr std::string_view text = R"txt(# Singularities of 1-symmetric cubic threefolds, unipotent case.
# One row per line: tag;configuration;mu
unipotent;A11;11
unipotent;U12;12
unipotent;T266;13
unipotent;T256;12
unipotent;T246+A1;12
unipotent;J10+A2;12
unipotent;J10+A1;11
)txt";
    return text;
}

}  // namespace cubicfolds::catalog
