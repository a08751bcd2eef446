// Generated transcription of the published solution table and family
// claims. Regenerate rather than hand-editing: the checksum below locks
// the bytes, and load_corpus() refuses anything that drifted.

#include <cstdint>

namespace distint::detail {

extern const char* const kCorpusJsonl;
const char* const kCorpusJsonl =
    "{\"kind\":\"row\",\"payload\":{\"a\":[1302,254,185,70,132],\"mu\":[0,2,7,13,6478],\"p\":[1,3,5,12,20]},\"source\":\"Table 1, row 1\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1914,520,197,36,46],\"mu\":[0,4,14,21,6901],\"p\":[1,3,8,18,26]},\"source\":\"Table 1, row 2\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1596,444,91,112,22],\"mu\":[0,5,13,31,7105],\"p\":[1,3,9,23,35]},\"source\":\"Table 1, row 3\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[580,155,77,12,8],\"mu\":[0,5,19,32,2551],\"p\":[1,3,12,23,37]},\"source\":\"Table 1, row 4\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[3282,332,101,22,112],\"mu\":[1,5,14,20,9298],\"p\":[1,4,8,18,31]},\"source\":\"Table 1, row 5\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[2355,230,82,47,85],\"mu\":[1,7,14,23,8006],\"p\":[1,4,13,18,33]},\"source\":\"Table 1, row 6\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[754,20,47,24,24],\"mu\":[2,4,13,27,2638],\"p\":[1,5,8,22,36]},\"source\":\"Table 1, row 7\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1099,127,82,32,64],\"mu\":[1,5,13,23,5337],\"p\":[1,5,9,19,35]},\"source\":\"Table 1, row 8\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1688,84,30,57,16],\"mu\":[2,6,13,31,4219],\"p\":[1,5,9,22,36]},\"source\":\"Table 1, row 9\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1933,299,18,116,51],\"mu\":[1,8,11,29,7731],\"p\":[1,5,11,19,37]},\"source\":\"Table 1, row 10\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[3112,157,106,136,100],\"mu\":[2,5,7,14,8168],\"p\":[1,6,8,10,19]},\"source\":\"Table 1, row 11\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1915,232,184,21,155],\"mu\":[1,5,14,20,9574],\"p\":[1,6,8,21,28]},\"source\":\"Table 1, row 12\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[245,19,9,2,4],\"mu\":[2,6,13,19,574],\"p\":[1,6,9,16,24]},\"source\":\"Table 1, row 13\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[2436,56,74,45,56],\"mu\":[3,6,14,28,6668],\"p\":[1,6,10,20,40]},\"source\":\"Table 1, row 14\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1638,83,98,68,56],\"mu\":[2,6,14,25,6478],\"p\":[1,6,12,20,32]},\"source\":\"Table 1, row 15\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[4256,143,82,36,32],\"mu\":[3,10,19,37,8623],\"p\":[1,6,15,23,45]},\"source\":\"Table 1, row 16\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1071,33,31,18,42],\"mu\":[3,6,11,16,2735],\"p\":[1,7,9,17,20]},\"source\":\"Table 1, row 17\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[344,113,39,56,68],\"mu\":[0,7,11,19,4299],\"p\":[1,7,11,17,26]},\"source\":\"Table 1, row 18\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[2920,129,53,48,105],\"mu\":[3,9,14,19,8175],\"p\":[1,7,15,17,26]},\"source\":\"Table 1, row 19\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1064,107,56,99,140],\"mu\":[1,7,10,18,7496],\"p\":[1,8,10,18,23]},\"source\":\"Table 1, row 20\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[3225,180,74,92,68],\"mu\":[3,9,14,26,9631],\"p\":[1,8,13,19,33]},\"source\":\"Table 1, row 21\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1228,102,22,51,96],\"mu\":[2,9,13,23,6446],\"p\":[1,8,13,22,31]},\"source\":\"Table 1, row 22\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1535,144,44,102,30],\"mu\":[2,9,14,27,6446],\"p\":[1,8,13,22,31]},\"source\":\"Table 1, row 23\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1842,198,88,51,24],\"mu\":[2,9,17,27,6446],\"p\":[1,8,13,22,31]},\"source\":\"Table 1, row 24\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[3873,60,63,22,16],\"mu\":[5,11,18,34,6454],\"p\":[1,8,16,21,39]},\"source\":\"Table 1, row 25\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[986,29,6,22,27],\"mu\":[6,16,19,28,3058],\"p\":[1,15,20,24,36]},\"source\":\"Table 1, row 26\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[370,150,30,18,64],\"mu\":[1,5,12,22,4218],\"p\":[2,4,8,21,35]},\"source\":\"Table 1, row 27\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[387,30,79,56,21],\"mu\":[2,4,12,28,3483],\"p\":[2,5,9,20,34]},\"source\":\"Table 1, row 28\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[96,7,19,15,6],\"mu\":[2,4,10,18,768],\"p\":[2,5,10,14,22]},\"source\":\"Table 1, row 29\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[908,590,134,51,80],\"mu\":[1,7,12,18,8853],\"p\":[2,5,11,15,23]},\"source\":\"Table 1, row 30\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1225,46,120,164,46],\"mu\":[3,5,10,28,8008],\"p\":[2,6,10,15,35]},\"source\":\"Table 1, row 31\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[2058,184,80,41,39],\"mu\":[3,7,12,28,8008],\"p\":[2,6,10,15,35]},\"source\":\"Table 1, row 32\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[413,20,28,70,18],\"mu\":[3,6,14,28,3540],\"p\":[2,6,14,23,32]},\"source\":\"Table 1, row 33\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[590,50,7,22,45],\"mu\":[3,10,14,24,3540],\"p\":[2,6,14,23,32]},\"source\":\"Table 1, row 34\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[564,60,147,131,54],\"mu\":[2,6,16,33,8930],\"p\":[2,7,14,24,40]},\"source\":\"Table 1, row 35\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1036,183,24,58,72],\"mu\":[3,10,14,24,7326],\"p\":[2,8,13,20,32]},\"source\":\"Table 1, row 36\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[552,44,118,50,16],\"mu\":[3,8,16,42,4968],\"p\":[2,9,14,20,50]},\"source\":\"Table 1, row 37\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[258,81,52,7,33],\"mu\":[2,10,16,18,2924],\"p\":[2,10,14,19,22]},\"source\":\"Table 1, row 38\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[198,28,10,3,6],\"mu\":[4,12,18,22,1064],\"p\":[2,10,16,21,26]},\"source\":\"Table 1, row 39\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[654,258,63,57,62],\"mu\":[2,12,18,28,8393],\"p\":[2,10,16,23,35]},\"source\":\"Table 1, row 40\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[1962,86,42,45,54],\"mu\":[6,12,18,28,8393],\"p\":[2,10,16,23,35]},\"source\":\"Table 1, row 41\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[2575,133,47,30,52],\"mu\":[6,15,20,28,9888],\"p\":[2,10,20,23,34]},\"source\":\"Table 1, row 42\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[387,254,70,92,128],\"mu\":[2,6,10,19,8386],\"p\":[3,6,9,16,28]},\"source\":\"Table 1, row 43\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[516,381,140,23,104],\"mu\":[2,6,13,19,8386],\"p\":[3,6,9,16,28]},\"source\":\"Table 1, row 44\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[532,82,86,33,112],\"mu\":[3,7,16,22,7753],\"p\":[3,6,15,20,33]},\"source\":\"Table 1, row 45\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[798,164,43,24,98],\"mu\":[3,10,16,22,7753],\"p\":[3,6,15,20,33]},\"source\":\"Table 1, row 46\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[450,148,20,51,45],\"mu\":[3,9,13,26,5185],\"p\":[3,7,12,19,35]},\"source\":\"Table 1, row 47\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[411,51,13,3,46],\"mu\":[6,13,19,22,3563],\"p\":[3,12,16,23,31]},\"source\":\"Table 1, row 48\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[410,215,60,74,50],\"mu\":[3,13,16,25,7750],\"p\":[3,12,17,19,30]},\"source\":\"Table 1, row 49\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[78,51,40,21,31],\"mu\":[3,7,14,26,2810],\"p\":[4,7,12,19,40]},\"source\":\"Table 1, row 50\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[230,170,189,101,38],\"mu\":[3,8,16,22,8098],\"p\":[4,8,15,20,25]},\"source\":\"Table 1, row 51\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[179,70,12,81,9],\"mu\":[4,10,13,42,3582],\"p\":[4,9,14,20,48]},\"source\":\"Table 1, row 52\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[129,136,22,18,134],\"mu\":[3,11,16,22,7742],\"p\":[4,9,16,22,39]},\"source\":\"Table 1, row 53\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[379,85,55,30,80],\"mu\":[5,9,16,23,6446],\"p\":[5,8,13,22,31]},\"source\":\"Table 1, row 54\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[385,156,66,163,27],\"mu\":[5,10,13,36,8328],\"p\":[5,10,14,17,42]},\"source\":\"Table 1, row 55\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[344,249,24,75,21],\"mu\":[5,15,18,31,7313],\"p\":[5,11,19,22,35]},\"source\":\"Table 1, row 56\"}\n"
    "{\"kind\":\"row\",\"payload\":{\"a\":[4735,2941,514,593,213,391],\"mu\":[1,7,12,18,20,53979],\"p\":[2,5,11,18,21,23]},\"source\":\"Theorem 3.4\"}\n"
    "{\"kind\":\"family\",\"payload\":{\"intercepts\":[3282,332,101,22,112],\"mu\":[1,5,14,20,9298],\"mu_s_slope\":13236132,\"n_intercept\":2622,\"n_slope\":324632,\"p\":[1,4,8,18,31],\"slopes\":[4671576,472719,143871,31372,159936]},\"source\":\"Theorem 3.2\"}\n"
    "{\"kind\":\"family\",\"payload\":{\"intercepts\":[4735,2941,514,593,213,391],\"mu\":[1,7,12,18,20,53979],\"mu_s_slope\":9598038,\"n_intercept\":9387,\"n_slope\":829920,\"p\":[2,5,11,18,21,23],\"slopes\":[418600,260015,45448,52440,18837,34580]},\"source\":\"Theorem 3.5\"}\n"
    ;

extern const std::uint64_t kCorpusChecksum;
const std::uint64_t kCorpusChecksum = 62083961666988785ull;

}  // namespace distint::detail
