#include "table_data.hpp"

namespace aisr::detail {

const int kCatalogIds[kCatalogCount] = {
    276, 277, 278, 279, 280, 281, 282, 283, 284, 285, 286, 287, 288, 289,
    290, 291, 292, 293, 294, 295, 296, 297, 298, 299, 300, 301, 302, 303,
    304, 305, 306, 307, 308, 309, 310, 311, 312, 313, 314, 315, 316, 317,
    318, 319, 320, 321, 322, 323, 324, 325, 326, 327, 328, 329, 330, 331,
    332, 333, 334, 335, 336, 337, 338, 339, 340, 341, 342, 343, 344, 345,
    346, 347, 348, 349, 350, 351, 352, 353, 354, 355, 356, 357, 358, 359,
    360, 361, 362, 363, 364, 365, 366, 367, 368, 369, 370, 371, 372, 373,
    374, 375, 376, 377, 378, 379, 380, 381, 382, 383, 384, 385, 386, 387,
};

// Multiplication tables over carrier {1,2,3,4}, stored 0-based, row-major,
// rows indexed by the left operand.
const std::uint8_t kCatalogMul[kCatalogCount][16] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},  // S_(4,276)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},  // S_(4,277)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3},  // S_(4,278)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 3},  // S_(4,279)
    {0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0, 3},  // S_(4,280)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 3},  // S_(4,281)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 3},  // S_(4,282)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 3},  // S_(4,283)
    {0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 2, 3, 0, 0, 0, 3},  // S_(4,284)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 3, 0, 0, 3, 2},  // S_(4,285)
    {0, 0, 2, 3, 0, 0, 2, 3, 0, 0, 2, 3, 0, 0, 2, 3},  // S_(4,286)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},  // S_(4,287)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},  // S_(4,288)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3},  // S_(4,289)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 3},  // S_(4,290)
    {0, 0, 0, 3, 0, 1, 0, 3, 0, 0, 0, 3, 0, 0, 0, 3},  // S_(4,291)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 3},  // S_(4,292)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 0, 0, 2, 3},  // S_(4,293)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 3},  // S_(4,294)
    {0, 0, 0, 3, 0, 1, 0, 3, 0, 0, 2, 3, 0, 0, 0, 3},  // S_(4,295)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 3, 0, 0, 3, 2},  // S_(4,296)
    {0, 0, 2, 3, 0, 1, 2, 3, 0, 0, 2, 3, 0, 0, 2, 3},  // S_(4,297)
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0},  // S_(4,298)
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2},  // S_(4,299)
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 3},  // S_(4,300)
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 3},  // S_(4,301)
    {0, 1, 0, 3, 0, 1, 0, 3, 0, 1, 0, 3, 0, 1, 0, 3},  // S_(4,302)
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 3},  // S_(4,303)
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 2, 3},  // S_(4,304)
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 0, 0, 1, 0, 3},  // S_(4,305)
    {0, 1, 0, 3, 0, 1, 0, 3, 0, 1, 2, 3, 0, 1, 0, 3},  // S_(4,306)
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 3, 0, 1, 3, 2},  // S_(4,307)
    {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3},  // S_(4,308)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 3, 3},  // S_(4,309)
    {0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0, 3, 3, 3, 3, 3},  // S_(4,310)
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 3, 3, 3, 3},  // S_(4,311)
    {0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 2, 3, 3, 3, 3, 3},  // S_(4,312)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 3, 3, 3, 3},  // S_(4,313)
    {0, 0, 0, 3, 0, 1, 0, 3, 0, 0, 0, 3, 3, 3, 3, 3},  // S_(4,314)
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 3, 3, 3, 3},  // S_(4,315)
    {0, 0, 0, 3, 0, 1, 0, 3, 0, 0, 2, 3, 3, 3, 3, 3},  // S_(4,316)
    {0, 1, 0, 3, 0, 1, 0, 3, 0, 1, 0, 3, 3, 3, 3, 3},  // S_(4,317)
    {0, 1, 0, 3, 0, 1, 0, 3, 0, 1, 2, 3, 3, 3, 3, 3},  // S_(4,318)
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 3, 3, 3, 3},  // S_(4,319)
    {0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 2, 2, 3, 3, 3, 3},  // S_(4,320)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},  // S_(4,321)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 2},  // S_(4,322)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 3},  // S_(4,323)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 2, 0, 0, 0, 3},  // S_(4,324)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 2, 3},  // S_(4,325)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 2, 0, 0, 2, 3},  // S_(4,326)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 2, 0, 0, 0, 0, 3},  // S_(4,327)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 2, 3, 0, 0, 3, 2},  // S_(4,328)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0},  // S_(4,329)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 2},  // S_(4,330)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 3},  // S_(4,331)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 2, 0, 1, 0, 3},  // S_(4,332)
    {0, 1, 0, 3, 1, 1, 1, 1, 0, 1, 0, 3, 0, 1, 0, 3},  // S_(4,333)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1, 2, 3},  // S_(4,334)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 2, 0, 1, 2, 3},  // S_(4,335)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 2, 0, 0, 1, 0, 3},  // S_(4,336)
    {0, 1, 0, 3, 1, 1, 1, 1, 0, 1, 2, 3, 0, 1, 0, 3},  // S_(4,337)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 2, 3, 0, 1, 3, 2},  // S_(4,338)
    {0, 1, 2, 3, 1, 1, 1, 1, 0, 1, 2, 3, 0, 1, 2, 3},  // S_(4,339)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 3, 3, 3, 3},  // S_(4,340)
    {0, 0, 0, 3, 1, 1, 1, 3, 0, 0, 0, 3, 3, 3, 3, 3},  // S_(4,341)
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 2, 0, 3, 3, 3, 3},  // S_(4,342)
    {0, 0, 0, 3, 1, 1, 1, 3, 0, 0, 2, 3, 3, 3, 3, 3},  // S_(4,343)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 3, 1, 3, 3},  // S_(4,344)
    {0, 1, 0, 3, 1, 1, 1, 1, 0, 1, 0, 3, 3, 1, 3, 3},  // S_(4,345)
    {0, 1, 0, 3, 1, 1, 1, 3, 0, 1, 0, 3, 3, 1, 3, 3},  // S_(4,346)
    {0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 2, 0, 3, 1, 3, 3},  // S_(4,347)
    {0, 1, 0, 3, 1, 1, 1, 1, 0, 1, 2, 3, 3, 1, 3, 3},  // S_(4,348)
    {0, 1, 0, 3, 1, 1, 1, 3, 0, 1, 2, 3, 3, 1, 3, 3},  // S_(4,349)
    {0, 1, 0, 3, 1, 1, 1, 1, 0, 1, 0, 3, 3, 3, 3, 3},  // S_(4,350)
    {0, 1, 0, 3, 1, 1, 1, 3, 0, 1, 0, 3, 3, 3, 3, 3},  // S_(4,351)
    {0, 1, 0, 3, 1, 1, 1, 1, 0, 1, 2, 3, 3, 3, 3, 3},  // S_(4,352)
    {0, 1, 0, 3, 1, 1, 1, 3, 0, 1, 2, 3, 3, 3, 3, 3},  // S_(4,353)
    {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3},  // S_(4,354)
    {0, 1, 0, 0, 1, 1, 1, 1, 2, 1, 2, 2, 3, 1, 3, 3},  // S_(4,355)
    {1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 2, 0, 1, 1, 0, 1},  // S_(4,356)
    {1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 2, 3, 1, 1, 0, 1},  // S_(4,357)
    {1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 2, 0, 1, 1, 3, 1},  // S_(4,358)
    {1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 2, 3, 1, 1, 3, 1},  // S_(4,359)
    {1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 2, 0, 1, 1, 1, 3},  // S_(4,360)
    {1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 2, 0, 1, 1, 1, 1},  // S_(4,361)
    {1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 2, 3, 1, 1, 1, 1},  // S_(4,362)
    {1, 1, 1, 3, 1, 1, 1, 3, 0, 1, 2, 3, 1, 1, 1, 3},  // S_(4,363)
    {1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 0, 1},  // S_(4,364)
    {1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 3, 1},  // S_(4,365)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0},  // S_(4,366)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1},  // S_(4,367)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 3},  // S_(4,368)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 1},  // S_(4,369)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1},  // S_(4,370)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},  // S_(4,371)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2},  // S_(4,372)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3},  // S_(4,373)
    {1, 1, 1, 3, 1, 1, 1, 3, 1, 1, 1, 3, 1, 1, 1, 3},  // S_(4,374)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 3},  // S_(4,375)
    {1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 2, 1, 3, 3, 3, 3},  // S_(4,376)
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 3},  // S_(4,377)
    {1, 1, 1, 3, 1, 1, 1, 3, 1, 1, 1, 3, 3, 3, 3, 3},  // S_(4,378)
    {2, 0, 2, 2, 0, 1, 2, 0, 2, 2, 2, 2, 2, 0, 2, 2},  // S_(4,379)
    {2, 2, 2, 2, 0, 1, 2, 0, 2, 2, 2, 2, 2, 2, 2, 2},  // S_(4,380)
    {2, 1, 2, 2, 1, 1, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2},  // S_(4,381)
    {2, 2, 2, 2, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2},  // S_(4,382)
    {2, 0, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2, 0, 2, 2},  // S_(4,383)
    {2, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 2},  // S_(4,384)
    {2, 2, 2, 2, 2, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},  // S_(4,385)
    {2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},  // S_(4,386)
    {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},  // S_(4,387)
};

// Join table of the additive semilattice shared by all catalog entries:
// 3 < 1 < 2 and 4 < 1 < 2, with 3 and 4 incomparable.
const std::uint8_t kFigureAdd[16] = {
    0, 1, 0, 0,
    1, 1, 1, 1,
    0, 1, 2, 0,
    0, 1, 0, 3,
};

}  // namespace aisr::detail
