#include "gsdf/catalog.hpp"

namespace gsdf::detail {

// Representatives of the equivalence classes for 33 <= v <= 45, one record
// per family: "label v k1 k2 k3 k4 lambda type" followed by the four blocks.
// A '#' line attaches a note to the next record.
extern const char* const catalog_text = R"CATALOG(
33-kkss-a 33 16 16 15 11 25 kkss
[2,4,6,10,13,14,15,16,21,22,24,25,26,28,30,32],
[3,4,5,6,7,8,9,12,15,16,19,20,22,23,31,32],
[0,2,7,8,12,13,14,16,17,19,20,21,25,26,31],
[0,2,5,8,10,11,22,23,25,28,31].
33-kkss-b 33 16 16 15 11 25 kkss
[1,3,5,6,11,12,14,16,18,20,23,24,25,26,29,31],
[2,4,5,9,11,12,13,15,16,19,23,25,26,27,30,32],
[0,1,2,3,5,11,12,16,17,21,22,28,30,31,32],
[0,8,9,12,15,16,17,18,21,24,25].
33-kkss-c 33 16 16 15 11 25 kkss
[4,5,7,8,9,10,12,14,16,18,20,22,27,30,31,32],
[3,7,8,9,10,12,13,15,16,19,22,27,28,29,31,32],
[0,1,6,7,8,10,11,14,19,22,23,25,26,27,32],
[0,7,10,12,15,16,17,18,21,23,26].
33-kkss-d 33 16 16 15 11 25 kkss
[3,4,5,6,7,9,10,12,14,16,18,20,22,25,31,32],
[1,2,4,5,6,7,8,13,14,16,18,21,22,23,24,30],
[0,1,3,4,9,10,11,14,19,22,23,24,29,30,32],
[0,3,4,7,9,12,21,24,26,29,30].
33-kkss-e 33 16 16 15 11 25 kkss
[2,4,6,8,11,12,13,16,18,19,23,24,26,28,30,32],
[2,3,4,5,8,11,16,18,19,20,21,23,24,26,27,32],
[0,1,2,3,7,8,10,11,22,23,25,26,30,31,32],
[0,4,6,9,10,16,17,23,24,27,29].
33-kkss-f 33 16 16 15 11 25 kkss
[2,4,5,10,12,16,18,19,20,22,24,25,26,27,30,32],
[2,5,9,11,12,13,14,16,18,23,25,26,27,29,30,32],
[0,1,3,6,7,10,11,12,21,22,23,26,27,30,32],
[0,7,8,12,15,16,17,18,21,25,26].
33-kkss-g 33 16 16 13 12 24 kkss
[1,3,5,7,8,10,11,13,14,15,16,21,24,27,29,31],
[1,3,7,9,10,11,15,16,19,20,21,25,27,28,29,31],
[0,3,4,5,7,10,11,22,23,26,28,29,30],
[3,8,9,11,12,13,20,21,22,24,25,30].
33-kkss-h 33 16 16 13 12 24 kkss
[2,3,7,9,10,12,14,15,16,20,22,25,27,28,29,32],
[1,7,8,10,12,16,18,19,20,22,24,27,28,29,30,31],
[0,2,3,4,5,11,14,19,22,28,29,30,31],
[5,7,8,11,12,16,17,21,22,25,26,28].
33-kkss-i 33 16 16 13 12 24 kkss
[1,3,5,6,8,9,12,14,15,16,20,22,23,26,29,31],
[1,2,10,11,14,16,18,20,21,24,25,26,27,28,29,30],
[0,3,4,8,9,10,12,21,23,24,25,29,30],
[1,2,3,9,12,14,19,21,24,30,31,32].
33-kkss-j 33 16 16 13 12 24 kkss
[1,3,5,7,8,11,14,15,16,20,21,23,24,27,29,31],
[1,2,5,8,10,12,13,14,15,16,22,24,26,27,29,30],
[0,4,5,6,12,14,15,18,19,21,27,28,29],
[1,2,3,4,7,14,19,26,29,30,31,32].
33-kkss-k 33 16 16 13 12 24 kkss
[2,3,5,7,10,14,15,16,20,21,22,24,25,27,29,32],
[2,4,5,6,11,12,14,15,16,20,23,24,25,26,30,32],
[0,2,4,7,8,9,10,23,24,25,26,29,31],
[5,8,9,12,13,15,18,20,21,24,25,28].
33-kkss-l 33 16 16 13 12 24 kkss
[3,4,5,6,8,10,12,13,15,16,19,22,24,26,31,32],
[2,4,5,8,9,10,12,13,14,15,16,22,26,27,30,32],
[0,1,2,3,9,11,15,18,22,24,30,31,32],
[3,6,7,11,12,14,19,21,22,26,27,30].
33-kkss-m 33 16 16 13 12 24 kkss
[1,2,4,5,6,8,10,12,13,15,16,19,22,24,26,30],
[1,2,3,4,6,7,8,11,13,14,16,18,21,23,24,28],
[0,4,6,9,10,15,16,17,18,23,24,27,29],
[3,4,12,13,15,16,17,18,20,21,29,30].
33-kkss-n 33 16 16 13 12 24 kkss
[1,5,7,8,11,13,15,16,19,21,23,24,27,29,30,31],
[2,3,4,5,7,8,9,11,12,14,16,18,20,23,27,32],
[0,7,8,9,10,13,14,19,20,23,24,25,26],
[3,4,6,8,9,16,17,24,25,27,29,30].
33-kkss-o 33 16 16 13 12 24 kkss
[4,5,7,11,13,15,16,19,21,23,24,25,27,30,31,32],
[1,2,3,4,5,6,9,11,12,13,16,18,19,23,25,26],
[0,6,9,11,12,13,16,17,20,21,22,24,27],
[2,6,7,9,11,12,21,22,24,26,27,31].
33-kkss-p 33 16 16 13 12 24 kkss
[2,3,6,11,13,15,16,19,21,23,24,25,26,28,29,32],
[1,3,4,5,9,16,18,19,20,21,22,23,25,26,27,31],
[0,3,5,9,12,13,14,19,20,21,24,28,30],
[4,6,9,10,15,16,17,18,23,24,27,29].
33-kkss-q 33 16 16 13 12 24 kkss
[3,5,8,9,13,15,16,19,21,22,23,26,27,29,31,32],
[1,3,4,5,7,9,13,14,15,16,21,22,23,25,27,31],
[0,1,2,3,4,11,14,19,22,29,30,31,32],
[3,4,8,11,13,16,17,20,22,25,29,30].
33-kkss-r 33 16 16 13 12 24 kkss
[3,4,6,7,9,12,13,14,16,18,22,23,25,28,31,32],
[2,3,4,5,7,9,10,11,12,15,16,19,20,25,27,32],
[0,1,2,4,6,13,16,17,20,27,29,31,32],
[3,4,7,9,15,16,17,18,24,26,29,30].
33-kkss-s 33 16 16 13 12 24 kkss
[1,2,3,4,7,9,12,14,16,18,20,22,23,25,27,28],
[2,3,4,5,6,9,10,11,12,15,16,19,20,25,26,32],
[0,1,2,3,9,12,16,17,21,24,30,31,32],
[2,6,10,12,13,15,18,20,21,23,27,31].
33-kkss-t 33 16 16 13 12 24 kkss
[2,6,8,10,11,12,13,16,18,19,24,26,28,29,30,32],
[1,3,4,5,7,8,9,10,12,15,16,19,20,22,27,31],
[0,7,8,10,12,13,16,17,20,21,23,25,26],
[4,5,6,8,13,14,19,20,25,27,28,29].
37-kkss-a 37 18 18 16 13 28 kkss
[1,2,3,4,6,7,8,11,14,16,17,18,22,24,25,27,28,32],
[1,3,6,8,12,15,19,20,21,23,24,26,27,28,30,32,33,35],
[1,5,8,9,14,16,17,18,19,20,21,23,28,29,32,36],
[0,4,5,6,10,12,13,24,25,27,31,32,33].
37-kkss-b 37 18 18 16 13 28 kkss
[1,2,3,4,5,13,18,20,21,22,23,25,26,27,28,29,30,31],
[1,2,4,6,8,9,12,14,15,18,20,21,24,26,27,30,32,34],
[1,5,6,7,8,11,15,16,21,22,26,29,30,31,32,36],
[0,1,4,6,9,13,17,20,24,28,31,33,36].
37-kkss-c 37 18 18 16 13 28 kkss
[1,4,5,6,7,8,13,17,19,21,22,23,25,26,27,28,34,35],
[1,3,5,7,8,10,11,14,15,16,19,20,24,25,28,31,33,35],
[2,4,5,6,8,13,16,18,19,21,24,29,31,32,33,35],
[0,7,12,13,14,15,18,19,22,23,24,25,30].
37-kkss-d 37 18 18 16 13 28 kkss
[1,4,7,10,11,12,15,17,19,21,23,24,28,29,31,32,34,35],
[1,3,4,7,9,11,12,16,17,19,22,23,24,27,29,31,32,35],
[3,7,8,14,15,16,17,18,19,20,21,22,23,29,30,34],
[0,5,7,9,10,11,18,19,26,27,28,30,32].
37-kkss-e 37 18 18 16 13 28 kkss
[1,2,4,5,6,7,11,14,16,17,18,22,24,25,27,28,29,34],
[1,2,3,5,10,13,15,19,20,21,23,25,26,28,29,30,31,33],
[2,3,5,6,8,9,10,14,23,27,28,29,31,32,34,35],
[0,3,4,10,12,16,18,19,21,25,27,33,34].
37-kkss-f 37 18 18 16 13 28 kkss
[1,2,3,4,5,6,8,9,10,12,14,17,19,21,22,24,26,30],
[1,2,3,4,6,8,10,11,14,15,18,20,21,24,25,28,30,32],
[3,5,6,11,13,14,17,18,19,20,23,24,26,31,32,34],
[0,3,10,11,12,15,16,21,22,25,26,27,34].
37-kkss-g 37 18 18 16 13 28 kkss
[1,2,3,4,6,7,9,10,11,14,16,18,20,22,24,25,29,32],
[1,2,3,4,5,8,9,10,11,13,14,16,18,20,22,25,30,31],
[2,3,4,6,7,15,16,18,19,21,22,30,31,33,34,35],
[0,2,5,8,12,13,18,19,24,25,29,32,35].
41-kkss-a 41 20 20 16 16 31 kkss
[2,4,7,8,10,12,13,14,16,19,20,23,24,26,30,32,35,36,38,40],
[3,4,8,9,10,12,16,19,21,23,24,26,27,28,30,34,35,36,39,40],
[4,5,6,7,9,13,14,20,21,27,28,32,34,35,36,37],
[8,9,11,12,13,15,18,20,21,23,26,28,29,30,32,33].
41-kkss-b 41 20 20 16 16 31 kkss
[2,4,6,7,8,10,11,14,15,17,20,22,23,25,28,29,32,36,38,40],
[1,2,4,6,9,10,14,16,17,18,19,20,26,28,29,30,33,34,36,38],
[3,4,5,6,7,10,11,16,25,30,31,34,35,36,37,38],
[2,4,7,8,9,12,14,15,26,27,29,32,33,34,37,39].
41-kkss-c 41 20 20 16 16 31 kkss
[2,7,9,11,13,14,16,17,20,22,23,26,29,31,33,35,36,37,38,40],
[1,2,7,9,11,12,15,17,18,19,20,25,27,28,31,33,35,36,37,38],
[5,6,7,9,13,14,17,18,23,24,27,28,32,34,35,36],
[2,3,4,6,7,9,10,18,23,31,32,34,35,37,38,39].
43-ksss-a 43 21 19 19 16 32 ksss
[2,3,4,5,6,7,10,12,14,15,16,19,20,21,25,26,30,32,34,35,42],
[0,2,4,5,7,10,11,12,13,17,26,30,31,32,33,36,38,39,41],
[0,3,5,8,9,15,17,18,19,21,22,24,25,26,28,34,35,38,40],
[4,5,6,8,12,13,16,19,24,27,30,31,35,37,38,39].
43-kkss-a 43 21 21 21 15 35 kkss
[1,3,5,9,11,13,14,16,17,21,23,24,25,28,31,33,35,36,37,39,41],
[4,5,6,9,14,15,16,17,18,19,21,23,30,31,32,33,35,36,40,41,42],
[0,1,3,4,6,7,8,10,14,15,20,23,28,29,33,35,36,37,39,40,42],
[0,1,4,5,6,14,17,20,23,26,29,37,38,39,42].
43-kkss-b 43 21 21 18 16 33 kkss
[1,4,5,7,10,12,15,17,19,21,23,25,27,29,30,32,34,35,37,40,41],
[1,2,3,10,13,14,17,19,22,23,25,27,28,31,32,34,35,36,37,38,39],
[2,3,4,7,9,10,12,13,17,26,30,31,33,34,36,39,40,41],
[3,4,8,12,13,14,15,16,27,28,29,30,31,35,39,40].
43-kkss-c 43 21 21 18 16 33 kkss
[2,4,6,9,10,15,16,18,21,23,24,26,29,30,31,32,35,36,38,40,42],
[4,7,8,9,11,12,15,17,22,23,24,25,27,29,30,33,37,38,40,41,42],
[6,7,9,13,14,15,17,18,19,24,25,26,28,29,30,34,36,37],
[7,8,9,11,13,16,17,20,23,26,27,30,32,34,35,36].
43-kkss-d 43 21 21 18 16 33 kkss
[1,3,8,10,12,15,16,18,19,21,23,26,29,30,32,34,36,37,38,39,41],
[1,2,4,5,6,10,11,12,13,14,16,17,19,20,21,25,28,34,35,36,40],
[2,4,6,7,12,14,15,18,19,24,25,28,29,31,36,37,39,41],
[3,6,7,13,18,19,20,21,22,23,24,25,30,36,37,40].
43-kkks-a 43 21 21 21 15 35 kkks
[3,5,6,8,10,13,14,15,19,21,23,25,26,27,31,32,34,36,39,41,42],
[3,4,7,11,13,14,17,19,20,22,25,27,28,31,33,34,35,37,38,41,42],
[1,2,3,13,14,16,17,19,20,21,25,28,31,32,33,34,35,36,37,38,39],
[0,6,10,14,15,16,17,19,24,26,27,28,29,33,37].
43-kkks-b 43 21 21 21 15 35 kkks
[1,3,4,6,9,10,13,14,19,21,23,25,26,27,28,31,32,35,36,38,41],
[1,3,7,8,10,13,14,15,17,18,19,21,23,27,31,32,34,37,38,39,41],
[2,4,5,6,13,14,15,16,17,20,21,24,25,31,32,33,34,35,36,40,42],
[0,1,2,4,5,10,12,18,25,31,33,38,39,41,42].
43-kkks-c 43 21 21 21 15 35 kkks
[1,2,3,5,10,13,16,17,19,21,23,25,28,29,31,32,34,35,36,37,39],
[1,2,4,5,6,10,11,13,14,16,19,21,23,25,26,28,31,34,35,36,40],
[2,4,5,6,7,10,11,12,13,17,21,23,24,25,27,28,29,34,35,40,42],
[0,1,2,3,6,10,16,17,26,27,33,37,40,41,42].
43-kkks-d 43 21 21 21 15 35 kkks
[2,4,5,6,8,9,11,12,13,17,19,21,23,25,27,28,29,33,36,40,42],
[2,5,6,7,8,11,13,15,16,17,18,20,21,24,29,31,33,34,39,40,42],
[4,5,6,9,10,11,13,14,16,17,18,19,20,21,28,31,35,36,40,41,42],
[0,3,10,11,13,14,15,20,23,28,29,30,32,33,40].
43-kkks-e 43 21 21 21 15 35 kkks
[1,3,6,8,11,12,15,17,21,23,24,25,27,29,30,33,34,36,38,39,41],
[6,8,9,10,11,13,16,17,20,21,24,25,28,29,31,36,38,39,40,41,42],
[2,3,8,9,10,11,12,13,15,16,17,18,19,20,22,29,36,37,38,39,42],
[0,2,4,8,9,14,15,20,23,28,29,34,35,39,41].
45-ksss-a 45 22 22 21 16 36 ksss
[1,2,3,6,7,10,11,13,15,22,24,25,26,27,28,29,31,33,36,37,40,41],
[1,3,4,7,9,10,13,15,20,21,22,23,24,25,30,32,35,36,38,41,42,44],
[0,2,3,4,5,9,12,13,15,17,22,23,28,30,32,33,36,40,41,42,43],
[1,6,14,15,17,18,21,22,23,24,27,28,30,31,39,44].
45-ksss-b 45 22 22 21 16 36 ksss
[1,2,4,8,9,10,12,14,16,18,19,21,22,25,28,30,32,34,38,39,40,42],
[1,2,4,5,7,10,14,15,17,21,22,23,24,28,30,31,35,38,40,41,43,44],
[0,1,4,5,6,9,10,11,12,14,22,23,31,33,34,35,36,39,40,41,44],
[2,5,9,10,18,20,21,22,23,24,25,27,35,36,40,43].
45-ksss-c 45 22 21 19 17 34 ksss
[1,3,6,7,9,12,16,18,21,22,25,26,28,30,31,32,34,35,37,40,41,43],
[0,1,2,4,8,9,10,11,12,15,19,26,30,33,34,35,36,37,41,43,44],
[0,2,3,5,10,13,14,18,19,20,25,26,27,31,32,35,40,42,43],
[0,3,4,5,7,9,17,21,22,23,24,28,36,38,40,41,42].
45-ksss-d 45 22 19 19 18 33 ksss
[1,3,6,8,10,12,18,21,22,25,26,28,29,30,31,32,34,36,38,40,41,43],
[0,1,7,8,11,13,18,19,21,22,23,24,26,27,32,34,37,38,44],
[0,1,2,4,5,12,13,17,19,22,23,26,28,32,33,40,41,43,44],
[3,4,5,6,8,11,12,17,21,24,28,33,34,37,39,40,41,42].
# listed with lambda 39; sum k - v and the blocks both give 36
45-kkss-a 45 22 22 21 16 36 kkss
[1,2,5,7,8,12,13,15,17,19,21,22,25,27,29,31,34,35,36,39,41,42],
[2,3,4,5,6,9,11,12,13,17,18,20,21,22,26,29,30,31,35,37,38,44],
[0,1,2,3,4,6,10,11,13,19,21,24,26,32,34,35,39,41,42,43,44],
[3,4,7,8,17,19,20,22,23,25,26,28,37,38,41,42].
)CATALOG";

// v k1 k2 k3 k4 lambda ksss kkss kkks  (x = parameter set does not fit the type)
extern const char* const table1_text = R"TABLE(
3 1 1 1 0 0 yes yes yes
5 2 2 1 1 1 yes yes x
7 3 3 3 1 3 yes yes yes
7 3 2 2 2 2 yes x x
9 4 4 3 2 4 yes yes x
11 5 4 4 3 5 yes x x
13 6 6 6 3 8 yes no yes
13 6 6 4 4 7 yes yes x
15 7 7 6 4 9 yes yes x
15 7 6 5 5 8 yes x x
17 8 7 7 5 10 yes x x
19 9 9 7 6 12 yes yes x
19 9 7 7 7 11 yes x x
21 10 10 10 6 15 yes yes yes
21 10 9 8 7 13 yes x x
23 11 11 10 7 16 yes yes x
25 12 12 9 9 17 no yes x
25 12 11 11 8 17 yes x x
25 12 10 10 9 16 yes x x
27 13 13 11 9 19 yes yes x
27 13 12 10 10 18 yes x x
29 14 13 12 10 20 yes x x
31 15 15 15 10 24 yes yes yes
31 15 13 12 12 21 yes x x
33 16 16 15 11 25 yes yes x
33 16 16 13 12 24 yes yes x
33 16 14 14 12 23 yes x x
35 17 16 16 12 26 yes x x
35 17 16 14 13 25 yes x x
37 18 18 16 13 28 yes yes x
37 18 15 15 15 26 yes x x
39 19 18 17 14 29 yes x x
39 19 17 16 15 28 yes x x
41 20 20 16 16 31 no yes x
43 21 21 21 15 35 no yes yes
43 21 21 18 16 33 no yes x
43 21 19 19 16 32 yes x x
43 21 20 17 17 32 no x x
45 22 22 21 16 36 yes yes x
45 22 21 19 17 34 yes x x
45 22 19 19 18 33 yes x x
47 23 22 22 17 37 no x x
47 23 21 19 19 35 no x x
49 24 24 22 18 39 no no x
49 24 22 21 19 37 no x x
)TABLE";

} // namespace gsdf::detail
