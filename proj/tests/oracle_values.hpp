#pragma once
// Generated by tests/oracles/generate.py; do not edit by hand.

#include <vector>

namespace oracle {

struct VmValue {
    int m;
    double x;
    double value;
};

inline std::vector<VmValue> const vm_values = {
    {0, 0, 1.7724538509055160273},
    {0, 0.05, 1.6767236956172683101},
    {0, 0.3, 1.3020434194270699135},
    {0, 1, 0.75787215614131210604},
    {0, 1.9, 0.47237556564904879464},
    {0, 2.1, 0.43446233410373489967},
    {0, 3, 0.31727127972797507727},
    {0, 7, 0.14144191359817651238},
    {0, 15, 0.066519495366275300327},
    {0, 40, 0.024992194812799621987},
    {0, 200, 0.0049999375023436035284},
    {1, 0, 0.88622692545275801365},
    {1, 0.05, 0.88417003856959098428},
    {1, 0.3, 0.83383780196509866454},
    {1, 1, 0.62106392192934394698},
    {1, 1.9, 0.43091199083145824866},
    {1, 2.1, 0.40125227365439654228},
    {1, 3, 0.30319412231221184319},
    {1, 7, 0.1400671904884391497},
    {1, 15, 0.066373290271195076636},
    {1, 40, 0.024984396927004631805},
    {1, 200, 0.0049998750070306641266},
    {2, 0, 0.66467019408956851024},
    {2, 0.05, 0.66411822099850283487},
    {2, 0.3, 0.64644760425961270461},
    {2, 1, 0.53420205855299203977},
    {2, 1.9, 0.39802574566934462199},
    {2, 2.1, 0.37416738853158848476},
    {2, 3, 0.29074280010509343575},
    {2, 7, 0.13873110905489474775},
    {2, 15, 0.066228040899921472678},
    {2, 40, 0.024976606331245619467},
    {2, 200, 0.0049998125140610353485},
    {3, 0, 0.55389182840797375853},
    {3, 0.05, 0.55361522734672826918},
    {3, 0.3, 0.54432804281417516597},
    {3, 1, 0.47412233658627733554},
    {3, 1.9, 0.37126123640286391575},
    {3, 2.1, 0.35162093824018491518},
    {3, 3, 0.27963963337559975211},
    {3, 7, 0.13743192096030418842},
    {3, 15, 0.066083736928788190737},
    {3, 40, 0.024968823014177929707},
    {3, 200, 0.004999750023434570761},
    {5, 0, 0.43618981487127933484},
    {5, 0.05, 0.43606871588900128951},
    {5, 0.3, 0.43190963450937954528},
    {5, 1, 0.39573834982052540837},
    {5, 1.9, 0.3301741348437275951},
    {5, 2.1, 0.31611513161115891144},
    {5, 3, 0.26065121616557003964},
    {5, 7, 0.13493775891987644788},
    {5, 15, 0.065797924663356757611},
    {5, 40, 0.024953278170861255408},
    {5, 200, 0.0049996250492105484896},
    {10, 0, 0.31230114333906127848},
    {10, 0.05, 0.31226006014530987929},
    {10, 0.3, 0.31083345361168700525},
    {10, 1, 0.29717213220500519886},
    {10, 1.9, 0.26666244003711958993},
    {10, 2.1, 0.25912877466363108146},
    {10, 3, 0.22585888556879972836},
    {10, 7, 0.12924434105601032547},
    {10, 15, 0.065099244924762428412},
    {10, 40, 0.0249145426502767149},
    {10, 200, 0.0049993126546456182946},
    {20, 0, 0.22221375806199575723},
    {20, 0.05, 0.22219951503384972374},
    {20, 0.3, 0.22170282013182554373},
    {20, 1, 0.21673651268032384274},
    {20, 1.9, 0.20421966961835987228},
    {20, 2.1, 0.20081173345708810395},
    {20, 3, 0.18416382819984903},
    {20, 7, 0.11971222673526972672},
    {20, 15, 0.063765918684087041023},
    {20, 40, 0.024837609389369525586},
    {20, 200, 0.0049986880411469622928},
    {50, 0, 0.14106825029753826651},
    {50, 0.05, 0.14106468810569818437},
    {50, 0.3, 0.14094018463601954017},
    {50, 1, 0.13966497405843053057},
    {50, 1.9, 0.13619437545916960303},
    {50, 2.1, 0.13518221627112769524},
    {50, 3, 0.12978743777075974355},
    {50, 7, 0.10019019684422245987},
    {50, 15, 0.06020797009862427666},
    {50, 40, 0.024611014004454320999},
    {50, 200, 0.0049968156043850055316},
    {100, 0, 0.099875078612625182106},
    {100, 0.05, 0.099873823924465912089},
    {100, 0.3, 0.099829939909100363974},
    {100, 1, 0.099376982884834858454},
    {100, 1.9, 0.098111588076222678809},
    {100, 2.1, 0.097733392921286960823},
    {100, 3, 0.095645634230383351621},
    {100, 7, 0.081786921904282561174},
    {100, 15, 0.055404556152133815881},
    {100, 40, 0.024246749351083687032},
    {100, 200, 0.0049936995468091388393},
    {200, 0, 0.070666497798639627366},
    {200, 0.05, 0.070666055030279345545},
    {200, 0.3, 0.07065056340538750222},
    {200, 1, 0.070490055148227682706},
    {200, 1.9, 0.070035724301917780247},
    {200, 2.1, 0.069898223764573033191},
    {200, 3, 0.069124740890634734544},
    {200, 7, 0.063321855013689818112},
    {200, 15, 0.04847025184932762798},
    {200, 40, 0.023564228623600970657},
    {200, 200, 0.0049874848801368649829},
};

struct Coefficients {
    char const* kind;
    std::vector<int> m;
    std::vector<double> weights;
};

inline std::vector<Coefficients> const coefficients = {
    {"product", {0, 0}, {1}},  // 1
    {"product", {1, 1}, {0.5, 0, 0.5}},  // 1/2 0 1/2
    {"product", {0, 2}, {0.25, 0.5, 0.25}},  // 1/4 1/2 1/4
    {"product", {2, 3}, {0.3125, 0.0625, 0.125, 0.125, 0.0625, 0.3125}},  // 5/16 1/16 1/8 1/8 1/16 5/16
    {"product", {3, 3}, {0.3125, 0, 0.1875, 0, 0.1875, 0, 0.3125}},  // 5/16 0 3/16 0 3/16 0 5/16
    {"product", {1, 3}, {0.25, 0.25, 0, 0.25, 0.25}},  // 1/4 1/4 0 1/4 1/4
    {"slater", {0, 1}, {0, 1}},  // 0 1
    {"slater", {1, 2}, {0, 0.25, 0, 0.75}},  // 0 1/4 0 3/4
    {"slater", {0, 3}, {0, 0.75, 0, 0.25}},  // 0 3/4 0 1/4
    {"slater", {2, 5}, {0, 0.421875, 0, 0.234375, 0, 0.015625, 0, 0.328125}},  // 0 27/64 0 15/64 0 1/64 0 21/64
    {"det", {0, 1, 2}, {0, 0.75, 0, 0.25}},  // 0 3/4 0 1/4
    {"det", {0, 1, 2, 3}, {0, 0.60416666666666663, 0, 0.29166666666666669, 0, 0.10416666666666667}},  // 0 29/48 0 7/24 0 5/48
};

} // namespace oracle
