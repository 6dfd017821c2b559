// Rows of the published tables of new self-dual codes, with the weight
// enumerator parameters reported for each code.
#include "sdc/code_tables.hpp"

namespace sdc {

const std::vector<CodeTable>& code_tables() {
    static const std::vector<CodeTable> tables = {
    {2,
     ConstructionId::Omega20_1,
     Alphabet::F4,
     80,
     CodeType::TypeI,
     14,
     "singly-even [80,40,14] codes from 20.1 over f4",
     {
         {1, "31223333300320201200", {EnumeratorFamily::W80, -275, 0, std::nullopt}},
         {2, "13111130203000233223", {EnumeratorFamily::W80, -270, 0, std::nullopt}},
         {3, "00302012331122313103", {EnumeratorFamily::W80, -250, 0, std::nullopt}},
         {4, "01332030221111113310", {EnumeratorFamily::W80, -235, 0, std::nullopt}},
         {5, "23320213130330103221", {EnumeratorFamily::W80, -230, 0, std::nullopt}},
         {6, "22011233231033013100", {EnumeratorFamily::W80, -210, 0, std::nullopt}},
         {7, "11333122033223331212", {EnumeratorFamily::W80, -205, 0, std::nullopt}},
         {8, "02222010112332220213", {EnumeratorFamily::W80, -195, 0, std::nullopt}},
         {9, "30333313000233100021", {EnumeratorFamily::W80, -190, 0, std::nullopt}},
         {10, "00111023231213313321", {EnumeratorFamily::W80, -175, 0, std::nullopt}},
         {11, "22310231030332003032", {EnumeratorFamily::W80, -165, 0, std::nullopt}},
         {12, "02002030232203221313", {EnumeratorFamily::W80, -155, 0, std::nullopt}},
         {13, "03121003232002123332", {EnumeratorFamily::W80, -150, 0, std::nullopt}},
         {14, "23200233120101002302", {EnumeratorFamily::W80, -145, 0, std::nullopt}},
         {15, "22133232333121133232", {EnumeratorFamily::W80, -140, 0, std::nullopt}},
         {16, "31031330230000203122", {EnumeratorFamily::W80, -135, 0, std::nullopt}},
         {17, "01103022122003122122", {EnumeratorFamily::W80, -130, 0, std::nullopt}},
         {18, "22010203131000112213", {EnumeratorFamily::W80, -65, 0, std::nullopt}},
         {19, "02330020210322001303", {EnumeratorFamily::W80, -260, 10, std::nullopt}},
     },
     0,
     0},
    {3,
     ConstructionId::Omega20_2,
     Alphabet::F2U,
     80,
     CodeType::TypeI,
     14,
     "singly-even [80,40,14] codes from 20.2 over f2u",
     {
         {20, "12222331200322021203", {EnumeratorFamily::W80, -280, 0, std::nullopt}},
         {21, "23330310032021331010", {EnumeratorFamily::W80, -120, 0, std::nullopt}},
         {22, "30320122023203322322", {EnumeratorFamily::W80, -80, 0, std::nullopt}},
         {23, "21222311321120112303", {EnumeratorFamily::W80, -320, 10, std::nullopt}},
     },
     0,
     0},
    {4,
     ConstructionId::Omega20_2,
     Alphabet::F4,
     80,
     CodeType::TypeI,
     14,
     "singly-even [80,40,14] codes from 20.2 over f4",
     {
         {24, "31211223330300232332", {EnumeratorFamily::W80, -360, 0, std::nullopt}},
         {25, "10201301032322330300", {EnumeratorFamily::W80, -215, 0, std::nullopt}},
         {26, "01021003132222203113", {EnumeratorFamily::W80, -125, 0, std::nullopt}},
         {27, "31003000101110232322", {EnumeratorFamily::W80, -370, 10, std::nullopt}},
         {28, "11210213102203230313", {EnumeratorFamily::W80, -300, 10, std::nullopt}},
     },
     0,
     0},
    {5,
     ConstructionId::Omega42_1,
     Alphabet::F2,
     84,
     CodeType::TypeI,
     14,
     "singly-even [84,42,14] codes from 42.1 over f2",
     {
         {1, "110001110100101111010000011100010000011111", {EnumeratorFamily::W84_3, 2988, 0, std::nullopt}},
         {2, "111111011111011000011010010000101000001001", {EnumeratorFamily::W84_3, 3024, 0, std::nullopt}},
         {3, "001001101100110111101011010000011100011010", {EnumeratorFamily::W84_3, 3030, 0, std::nullopt}},
         {4, "101111111010011001101100101011000001001000", {EnumeratorFamily::W84_3, 3066, 0, std::nullopt}},
         {5, "101001011101011110110100111111001011010100", {EnumeratorFamily::W84_3, 3072, 0, std::nullopt}},
         {6, "111100010111001011001010011100110100001001", {EnumeratorFamily::W84_3, 3108, 0, std::nullopt}},
         {7, "110101110100001100100000110101010010101111", {EnumeratorFamily::W84_3, 3114, 0, std::nullopt}},
         {8, "000000000110000110110010101101100110111000", {EnumeratorFamily::W84_3, 3150, 0, std::nullopt}},
         {9, "101010111001111011101001100100110100100000", {EnumeratorFamily::W84_3, 3156, 0, std::nullopt}},
         {10, "101100110111001110010100000010110101111000", {EnumeratorFamily::W84_3, 3192, 0, std::nullopt}},
     },
     45,
     11},
    {6,
     ConstructionId::Omega42_2,
     Alphabet::F2,
     84,
     CodeType::TypeI,
     14,
     "singly-even [84,42,14] codes from 42.2 over f2",
     {
         {56, "011001100101000010101000000000011110111100", {EnumeratorFamily::W84_3, 2016, 0, std::nullopt}},
         {57, "100101010001111110100110011011000001011001", {EnumeratorFamily::W84_3, 2100, 0, std::nullopt}},
         {58, "010110001001010100011100001111000111011011", {EnumeratorFamily::W84_3, 2148, 0, std::nullopt}},
         {59, "010101100111000010011001000001000000000001", {EnumeratorFamily::W84_3, 2190, 0, std::nullopt}},
         {60, "101110110000001010001011111001000000000101", {EnumeratorFamily::W84_3, 2232, 0, std::nullopt}},
         {61, "001000100010110011001101111011001001111100", {EnumeratorFamily::W84_3, 2316, 0, std::nullopt}},
         {62, "010010101101010100100111001011011001110001", {EnumeratorFamily::W84_3, 2352, 0, std::nullopt}},
         {63, "001101000100110000001101011011011011110011", {EnumeratorFamily::W84_3, 2358, 0, std::nullopt}},
         {64, "000011000001100101110100001010111101110111", {EnumeratorFamily::W84_3, 2394, 0, std::nullopt}},
         {65, "011101100100110011000111001110111101000000", {EnumeratorFamily::W84_3, 2400, 0, std::nullopt}},
     },
     42,
     66},
    {7,
     ConstructionId::Omega24_1,
     Alphabet::F2U,
     96,
     CodeType::TypeI,
     16,
     "singly-even [96,48,16] codes from 24.1 over f2u",
     {
         {1, "021111013112231302031321", {EnumeratorFamily::W96_I_2, 15336, -240, 0}},
         {2, "332030221021223333303031", {EnumeratorFamily::W96_I_2, 14664, -144, 0}},
         {3, "310201300213103023131203", {EnumeratorFamily::W96_I_2, 12456, -120, 0}},
         {4, "110330330331133112022003", {EnumeratorFamily::W96_I_2, 16608, -432, 12}},
         {5, "301201202300231031203031", {EnumeratorFamily::W96_I_2, 14712, -336, 12}},
     },
     0,
     0},
    {8,
     ConstructionId::Omega24_1,
     Alphabet::F4,
     96,
     CodeType::TypeI,
     16,
     "singly-even [96,48,16] codes from 24.1 over f4",
     {
         {6, "301220102333222223210331", {EnumeratorFamily::W96_I_2, 14448, -208, 0}},
         {7, "111322103200321233201211", {EnumeratorFamily::W96_I_2, 13776, -184, 0}},
         {8, "333110012302102113330110", {EnumeratorFamily::W96_I_2, 11652, -136, 0}},
         {9, "321212110001220122211301", {EnumeratorFamily::W96_I_2, 12624, -124, 0}},
         {10, "000232332103103311032121", {EnumeratorFamily::W96_I_2, 11364, -112, 0}},
         {11, "231232002131031220200120", {EnumeratorFamily::W96_I_2, 12036, -108, 0}},
         {12, "021301113010112220211130", {EnumeratorFamily::W96_I_2, 11580, -100, 0}},
         {13, "000332130323021220110022", {EnumeratorFamily::W96_I_2, 11880, -96, 0}},
         {14, "001022122300133130333310", {EnumeratorFamily::W96_I_2, 11424, -88, 0}},
         {15, "213121322231133130230323", {EnumeratorFamily::W96_I_2, 11256, -84, 0}},
     },
     46,
     16},
    {9,
     ConstructionId::Omega24_2,
     Alphabet::F2U,
     96,
     CodeType::TypeI,
     16,
     "singly-even [96,48,16] codes from 24.2 over f2u",
     {
         {62, "222222222220220133213123", {EnumeratorFamily::W96_I_2, 14928, -192, 0}},
         {63, "222222222220220133211121", {EnumeratorFamily::W96_I_2, 15120, -192, 0}},
         {64, "222220222011020210021113", {EnumeratorFamily::W96_I_2, 12540, -144, 0}},
         {65, "222222222011021013011303", {EnumeratorFamily::W96_I_2, 11484, -96, 0}},
         {66, "222222222011202110211131", {EnumeratorFamily::W96_I_2, 10764, -48, 0}},
         {67, "222222222101200131212230", {EnumeratorFamily::W96_I_2, 10800, -48, 0}},
         {68, "222222222011202110213111", {EnumeratorFamily::W96_I_2, 11148, -48, 0}},
         {69, "222222220103021223012121", {EnumeratorFamily::W96_I_2, 12168, -48, 0}},
         {70, "222222222101200131221023", {EnumeratorFamily::W96_I_2, 10752, 0, 0}},
         {71, "222222202121200111221203", {EnumeratorFamily::W96_I_2, 10848, 0, 0}},
     },
     19,
     72},
    {10,
     ConstructionId::Omega24_3,
     Alphabet::F2U,
     96,
     CodeType::TypeI,
     16,
     "singly-even [96,48,16] codes from 24.3 over f2u",
     {
         {91, "222220222111201001210311", {EnumeratorFamily::W96_I_2, 11112, -24, 0}},
         {92, "222222202111001223010313", {EnumeratorFamily::W96_I_2, 16224, -336, 12}},
         {93, "222222222011101333122333", {EnumeratorFamily::W96_I_2, 18336, -336, 12}},
         {94, "222222222101220113212010", {EnumeratorFamily::W96_I_2, 15264, -288, 12}},
         {95, "222220222111221003212111", {EnumeratorFamily::W96_I_2, 18528, -288, 12}},
         {96, "222220220101211331210113", {EnumeratorFamily::W96_I_2, 14832, -264, 12}},
         {97, "222220200103211331212113", {EnumeratorFamily::W96_I_2, 13776, -240, 12}},
         {98, "222220222111221003212313", {EnumeratorFamily::W96_I_2, 13920, -240, 12}},
         {99, "222222220021202121211101", {EnumeratorFamily::W96_I_2, 14496, -240, 12}},
         {100, "222222222113212131201003", {EnumeratorFamily::W96_I_2, 14592, -240, 12}},
         {101, "222222222011212313201101", {EnumeratorFamily::W96_I_2, 14784, -240, 12}},
         {102, "222222220021020101011121", {EnumeratorFamily::W96_I_2, 14880, -240, 12}},
         {103, "222222222113212333201003", {EnumeratorFamily::W96_I_2, 15360, -240, 12}},
         {104, "222222222011011111002013", {EnumeratorFamily::W96_I_2, 15456, -240, 12}},
         {105, "222222222211020101021321", {EnumeratorFamily::W96_I_2, 16032, -240, 12}},
     },
     0,
     0},
    {11,
     ConstructionId::Omega24_1,
     Alphabet::F2U,
     96,
     CodeType::TypeII,
     16,
     "doubly-even [96,48,16] codes from 24.1 over f2u",
     {
         {1, "320210300223213323022021", {EnumeratorFamily::W96_II, 8514, std::nullopt, std::nullopt}},
         {2, "122313111112022110302021", {EnumeratorFamily::W96_II, 8754, std::nullopt, std::nullopt}},
         {3, "122123010133300221011031", {EnumeratorFamily::W96_II, 8994, std::nullopt, std::nullopt}},
         {4, "001212011312020203212003", {EnumeratorFamily::W96_II, 9042, std::nullopt, std::nullopt}},
         {5, "122000032021320000301313", {EnumeratorFamily::W96_II, 9138, std::nullopt, std::nullopt}},
         {6, "010220032021103212312322", {EnumeratorFamily::W96_II, 9234, std::nullopt, std::nullopt}},
         {7, "210231130330223123221020", {EnumeratorFamily::W96_II, 9282, std::nullopt, std::nullopt}},
         {8, "032311303332300120032321", {EnumeratorFamily::W96_II, 9378, std::nullopt, std::nullopt}},
         {9, "213201111011203112303130", {EnumeratorFamily::W96_II, 9474, std::nullopt, std::nullopt}},
         {10, "110230310113303323101232", {EnumeratorFamily::W96_II, 9618, std::nullopt, std::nullopt}},
     },
     78,
     11},
    {12,
     ConstructionId::Omega24_1,
     Alphabet::F4,
     96,
     CodeType::TypeII,
     16,
     "doubly-even [96,48,16] codes from 24.1 over f4",
     {
         {89, "332010230212013330233103", {EnumeratorFamily::W96_II, 8274, std::nullopt, std::nullopt}},
         {90, "121001211131002223313030", {EnumeratorFamily::W96_II, 8418, std::nullopt, std::nullopt}},
         {91, "330222312102031223221213", {EnumeratorFamily::W96_II, 8658, std::nullopt, std::nullopt}},
         {92, "331001322120111003113202", {EnumeratorFamily::W96_II, 8838, std::nullopt, std::nullopt}},
         {93, "322112032202123203331221", {EnumeratorFamily::W96_II, 11478, std::nullopt, std::nullopt}},
         {94, "333003302201123232100313", {EnumeratorFamily::W96_II, 11526, std::nullopt, std::nullopt}},
         {95, "201120113100000113122122", {EnumeratorFamily::W96_II, 11742, std::nullopt, std::nullopt}},
         {96, "000232210010130121123202", {EnumeratorFamily::W96_II, 13194, std::nullopt, std::nullopt}},
     },
     0,
     0},
    {13,
     ConstructionId::Omega24_2,
     Alphabet::F2U,
     96,
     CodeType::TypeII,
     16,
     "doubly-even [96,48,16] codes from 24.2 over f2u",
     {
         {97, "222222220103200133210030", {EnumeratorFamily::W96_II, 10002, std::nullopt, std::nullopt}},
         {98, "222222220103021003012303", {EnumeratorFamily::W96_II, 10098, std::nullopt, std::nullopt}},
         {99, "222222220103200133212032", {EnumeratorFamily::W96_II, 10578, std::nullopt, std::nullopt}},
         {100, "222222220103021003010123", {EnumeratorFamily::W96_II, 10818, std::nullopt, std::nullopt}},
         {101, "222222220103221203210101", {EnumeratorFamily::W96_II, 10866, std::nullopt, std::nullopt}},
         {102, "222220202013221331211111", {EnumeratorFamily::W96_II, 12138, std::nullopt, std::nullopt}},
         {103, "222222222101122211113131", {EnumeratorFamily::W96_II, 12234, std::nullopt, std::nullopt}},
         {104, "222222222101020131001221", {EnumeratorFamily::W96_II, 12522, std::nullopt, std::nullopt}},
         {105, "222222220103200113212230", {EnumeratorFamily::W96_II, 12546, std::nullopt, std::nullopt}},
         {106, "222222222101201021210101", {EnumeratorFamily::W96_II, 12810, std::nullopt, std::nullopt}},
         {107, "222220222211020212001111", {EnumeratorFamily::W96_II, 13290, std::nullopt, std::nullopt}},
         {108, "222222202013220110213131", {EnumeratorFamily::W96_II, 13578, std::nullopt, std::nullopt}},
         {109, "222222222220222111213123", {EnumeratorFamily::W96_II, 28506, std::nullopt, std::nullopt}},
     },
     0,
     0},
    {14,
     ConstructionId::Omega24_3,
     Alphabet::F2U,
     96,
     CodeType::TypeII,
     16,
     "doubly-even [96,48,16] codes from 24.3 over f2u",
     {
         {110, "222220200103011331010113", {EnumeratorFamily::W96_II, 12186, std::nullopt, std::nullopt}},
         {111, "222222222011202121201123", {EnumeratorFamily::W96_II, 12426, std::nullopt, std::nullopt}},
         {112, "222222222011211111220213", {EnumeratorFamily::W96_II, 12714, std::nullopt, std::nullopt}},
         {113, "222220220101011331012113", {EnumeratorFamily::W96_II, 12762, std::nullopt, std::nullopt}},
         {114, "222222222011212313221303", {EnumeratorFamily::W96_II, 13002, std::nullopt, std::nullopt}},
         {115, "222020200101011331012133", {EnumeratorFamily::W96_II, 13050, std::nullopt, std::nullopt}},
         {116, "222220220101011331012133", {EnumeratorFamily::W96_II, 13338, std::nullopt, std::nullopt}},
         {117, "222222220211121333100113", {EnumeratorFamily::W96_II, 13866, std::nullopt, std::nullopt}},
         {118, "222222220211121333100131", {EnumeratorFamily::W96_II, 14826, std::nullopt, std::nullopt}},
         {119, "222222222011211311220213", {EnumeratorFamily::W96_II, 15978, std::nullopt, std::nullopt}},
         {120, "222222222011121333100333", {EnumeratorFamily::W96_II, 16170, std::nullopt, std::nullopt}},
         {121, "222222222011121333100311", {EnumeratorFamily::W96_II, 16554, std::nullopt, std::nullopt}},
     },
     0,
     0},
    };
    return tables;
}

}  // namespace sdc
