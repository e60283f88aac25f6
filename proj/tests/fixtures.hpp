#pragma once

// Golden test data: two benchmark problems with their known worked
// proofs, the bundled shallow instances for the expected-length checks,
// and sample generated identities. Two printed states in the worked
// proofs carried sign/target misprints in the source material; the
// corrected values here replay to zero, the originals do not.

#include <vector>

namespace fixtures {

// (identity, minimal proof length)
struct GoldenInstance {
    const char* name;
    const char* text;
    int bfs_length;
};

inline const std::vector<GoldenInstance>& golden_instances() {
    static const std::vector<GoldenInstance> v = {
        {"one_step",
         "sin(3*x + pi/2)*cos(x) - sin(4*x + pi/2)/2 - sin(2*x + pi/2)/2", 1},
        {"generated",
         "sqrt(3)*sin(x)/2 + sqrt(3)*sin(5*x)/2 + cos(x)/2 - cos(5*x)/2 - "
         "2*sin(3*x)*sin(2*x + pi/3)", 3},
        {"problem1",
         "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)**2*cos(x + pi/3) - "
         "sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) + sin(3*x + pi/6)", 5},
        {"problem2",
         "-sin(x)*sin(2*x)*sin(3*x) - sin(x)*cos(2*x)*cos(3*x) - "
         "sin(2*x)*cos(x)*cos(3*x) + sin(3*x)*cos(x)*cos(2*x)", 4},
    };
    return v;
}

// One step of a worked proof: rule family 'P' (pair) or 'A' (single),
// and the targeted factor(s) without exponents. target_b == nullptr for
// 'A'; target_b == target_a for a squared-factor pair.
struct WorkedStep {
    char family;
    const char* target_a;
    const char* target_b;
};

struct WorkedProof {
    const char* name;
    std::vector<const char*> states;  // S0 .. Sn, final "0"
    std::vector<WorkedStep> steps;
};

inline const std::vector<WorkedProof>& worked_proofs() {
    static const std::vector<WorkedProof> v = {
        {"generated_3step",
         {
             "sqrt(3)*sin(x)/2 + sqrt(3)*sin(5*x)/2 + cos(x)/2 - cos(5*x)/2 - "
             "2*sin(3*x)*sin(2*x + pi/3)",
             "sqrt(3)*sin(x)/2 + sqrt(3)*sin(5*x)/2 + cos(x)/2 - cos(5*x)/2 - "
             "cos(x - pi/3) + cos(5*x + pi/3)",
             // sign of the last term corrected; the printed source has
             // "-cos(5*x+pi/3)" which does not replay to zero
             "sqrt(3)*sin(5*x)/2 - cos(5*x)/2 + cos(5*x + pi/3)",
             "0",
         },
         {
             {'P', "sin(3*x)", "sin(2*x + pi/3)"},
             {'A', "cos(x - pi/3)", nullptr},
             {'A', "cos(5*x + pi/3)", nullptr},
         }},
        {"problem1_bfs_5step",
         {
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)**2*cos(x + pi/3) - "
             "sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) - "
             "sin(x + pi/6)*sin(2*x + pi/2)/2 + sin(x + pi/6)/4 + sin(3*x + pi/6)",
             "-sin(x - pi/6)/2 - sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) - "
             "sin(x + pi/6)*sin(2*x + pi/2)/2 + sin(x + pi/6)/4 + sin(3*x + pi/6)/2",
             "-sin(x - pi/6)/2 - sin(x + pi/6)*sin(2*x + pi/2) + sin(3*x + pi/6)/2",
             "-sin(x - pi/6)/2 - sin(x + pi/6)*cos(2*x) + sin(3*x + pi/6)/2",
             "0",
         },
         {
             {'P', "sin(x + pi/6)", "cos(x + pi/3)"},
             {'P', "sin(2*x)", "cos(x + pi/6)"},
             {'P', "sin(x + pi/3)", "cos(x + pi/6)"},
             {'A', "sin(2*x + pi/2)", nullptr},
             {'P', "sin(x + pi/6)", "cos(2*x)"},
         }},
        {"problem1_guided_5step",
         {
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)**2*cos(x + pi/3) - "
             "sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)**2*cos(x + pi/3) - "
             "sin(x + pi/6)*sin(2*x + pi/2)/2 - sin(x + pi/6)/4 + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*sin(2*x + pi/2) + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*cos(2*x) + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) + sin(x - pi/6)/2 + sin(3*x + pi/6)/2",
             "0",
         },
         {
             {'P', "sin(x + pi/3)", "cos(x + pi/6)"},
             {'P', "sin(x + pi/6)", "cos(x + pi/3)"},
             {'A', "sin(2*x + pi/2)", nullptr},
             {'P', "sin(x + pi/6)", "cos(2*x)"},
             {'P', "sin(2*x)", "cos(x + pi/6)"},
         }},
        {"problem1_sampled_9step",
         {
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)**2*cos(x + pi/3) - "
             "sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) + "
             "sin(3*x + pi/6) - cos(x + pi/3)/2 + cos(x + pi/3)*cos(2*x + pi/3)/2",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) + "
             "sin(3*x + pi/6) + cos(x)/4 - cos(x + pi/3)/2 + cos(3*x + 2*pi/3)/4",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/3)*sin(2*x + pi/3)/2 + "
             "sin(3*x + pi/6) + cos(x)/4 - cos(x + pi/3)/2 + cos(3*x + 2*pi/3)/4",
             "-sin(x - pi/6)/2 - sin(x + pi/3)*sin(2*x + pi/3)/2 + sin(3*x + pi/6)/2 + "
             "cos(x)/4 - cos(x + pi/3)/2 + cos(3*x + 2*pi/3)/4",
             "sqrt(3)*sin(x)/4 - sin(x - pi/6)/2 - sin(2*x + pi/3)*sin(x + pi/3)/2 + "
             "sin(3*x + pi/6)/2 + cos(3*x + 2*pi/3)/4",
             "sqrt(3)*sin(x)/4 - sin(x - pi/6)/2 + sin(3*x + pi/6)/2 - cos(x)/4 + "
             "cos(3*x + 2*pi/3)/2",
             "sqrt(3)*sin(x)/4 + sqrt(3)*sin(3*x)/4 - sin(x - pi/6)/2 - cos(x)/4 + "
             "cos(3*x)/4 + cos(3*x + 2*pi/3)/2",
             "sqrt(3)*sin(x)/4 - sin(x - pi/6)/2 - cos(x)/4",
             "0",
         },
         {
             {'P', "sin(x + pi/6)", "sin(x + pi/6)"},
             {'P', "cos(x + pi/3)", "cos(2*x + pi/3)"},
             {'P', "sin(x + pi/6)", "cos(x + pi/6)"},
             {'P', "sin(2*x)", "cos(x + pi/6)"},
             {'A', "cos(x + pi/3)", nullptr},
             {'P', "sin(2*x + pi/3)", "sin(x + pi/3)"},
             {'A', "sin(3*x + pi/6)", nullptr},
             {'A', "cos(3*x + 2*pi/3)", nullptr},
             {'A', "sin(x - pi/6)", nullptr},
         }},
        {"problem1_manual_10step",
         {
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)**2*cos(x + pi/3) - "
             "sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*sin(x + pi/3)*cos(x + pi/6) - "
             "sin(x + pi/6)*sin(2*x + pi/2)/2 + sin(x + pi/6)/4 + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*sin(2*x + pi/2)/2 + "
             "sin(x + pi/6)/4 - sin(x + pi/3)*sin(2*x + pi/3)/2 + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*cos(2*x)/2 + sin(x + pi/6)/4 - "
             "sin(x + pi/3)*sin(2*x + pi/3)/2 + sin(3*x + pi/6)",
             "-sin(2*x)*cos(x + pi/6) - sin(x + pi/6)*cos(2*x)/2 + sin(x + pi/6)/4 + "
             "sin(3*x + pi/6) - cos(x)/4 + cos(3*x + 2*pi/3)/4",
             "-sin(x - pi/6)/2 - sin(x + pi/6)*cos(2*x)/2 + sin(x + pi/6)/4 + "
             "sin(3*x + pi/6)/2 - cos(x)/4 + cos(3*x + 2*pi/3)/4",
             "-sin(x - pi/6)/4 + sin(x + pi/6)/4 + sin(3*x + pi/6)/4 - cos(x)/4 + "
             "cos(3*x + 2*pi/3)/4",
             "-sqrt(3)*sin(x)/8 + sin(x + pi/6)/4 + sin(3*x + pi/6)/4 - cos(x)/8 + "
             "cos(3*x + 2*pi/3)/4",
             "sin(3*x + pi/6)/4 + cos(3*x + 2*pi/3)/4",
             // sign of the first term corrected; the printed source has
             // "-sqrt(3)*sin(3*x)/8" which does not replay to zero
             "sqrt(3)*sin(3*x)/8 + cos(3*x)/8 + cos(3*x + 2*pi/3)/4",
             "0",
         },
         {
             {'P', "sin(x + pi/6)", "cos(x + pi/3)"},
             {'P', "sin(x + pi/6)", "cos(x + pi/6)"},
             {'A', "sin(2*x + pi/2)", nullptr},
             {'P', "sin(x + pi/3)", "sin(2*x + pi/3)"},
             {'P', "sin(2*x)", "cos(x + pi/6)"},
             // the printed source names sin(2*x)*cos(x + pi/6) here, but the
             // marked (and only replayable) pair is sin(x + pi/6)*cos(2*x)
             {'P', "sin(x + pi/6)", "cos(2*x)"},
             {'A', "sin(x - pi/6)", nullptr},
             {'A', "sin(x + pi/6)", nullptr},
             {'A', "sin(3*x + pi/6)", nullptr},
             {'A', "cos(3*x + 2*pi/3)", nullptr},
         }},
        {"problem2_bfs_4step",
         {
             "-sin(x)*sin(2*x)*sin(3*x) - sin(x)*cos(2*x)*cos(3*x) - "
             "sin(2*x)*cos(x)*cos(3*x) + sin(3*x)*cos(x)*cos(2*x)",
             "-sin(x)*cos(2*x)*cos(3*x) - sin(2*x)*cos(x)*cos(3*x) + "
             "sin(3*x)*cos(x)*cos(2*x) - sin(3*x)*cos(x)/2 + sin(3*x)*cos(3*x)/2",
             "sin(x)*cos(3*x)/2 - sin(2*x)*cos(x)*cos(3*x) + sin(3*x)*cos(x)*cos(2*x) - "
             "sin(3*x)*cos(x)/2",
             "sin(3*x)*cos(x)*cos(2*x) - sin(3*x)*cos(x)/2 - sin(3*x)*cos(3*x)/2",
             "0",
         },
         {
             {'P', "sin(x)", "sin(2*x)"},
             {'P', "sin(x)", "cos(2*x)"},
             {'P', "sin(2*x)", "cos(x)"},
             {'P', "cos(x)", "cos(2*x)"},
         }},
        {"problem2_guided_4step",
         {
             "-sin(x)*sin(2*x)*sin(3*x) - sin(x)*cos(2*x)*cos(3*x) - "
             "sin(2*x)*cos(x)*cos(3*x) + sin(3*x)*cos(x)*cos(2*x)",
             "-sin(x)*cos(2*x)*cos(3*x) - sin(2*x)*cos(x)*cos(3*x) + "
             "sin(3*x)*cos(x)*cos(2*x) - sin(3*x)*cos(x)/2 + sin(3*x)*cos(3*x)/2",
             "-sin(x)*cos(2*x)*cos(3*x) - sin(x)*cos(3*x)/2 + "
             "sin(3*x)*cos(x)*cos(2*x) - sin(3*x)*cos(x)/2",
             "-sin(x)*cos(2*x)*cos(3*x) - sin(x)*cos(3*x)/2 + sin(3*x)*cos(3*x)/2",
             "0",
         },
         {
             {'P', "sin(x)", "sin(2*x)"},
             {'P', "sin(2*x)", "cos(x)"},
             {'P', "cos(x)", "cos(2*x)"},
             {'P', "sin(x)", "cos(2*x)"},
         }},
        {"problem2_sampled_6step",
         {
             "-sin(x)*sin(2*x)*sin(3*x) - sin(x)*cos(2*x)*cos(3*x) - "
             "sin(2*x)*cos(x)*cos(3*x) + sin(3*x)*cos(x)*cos(2*x)",
             "-sin(x)*sin(2*x)*sin(3*x) - sin(x)*cos(2*x)*cos(3*x) - "
             "sin(2*x)*cos(x)*cos(3*x) + sin(2*x)*cos(2*x)/2 + sin(4*x)*cos(2*x)/2",
             "-sin(x)*cos(2*x)*cos(3*x) - sin(2*x)*cos(x)*cos(3*x) + "
             "sin(2*x)*cos(4*x)/2 + sin(4*x)*cos(2*x)/2",
             "-sin(x)*cos(2*x)*cos(3*x) - sin(2*x)*cos(x)*cos(3*x) - sin(2*x)/4 + "
             "sin(4*x)*cos(2*x)/2 + sin(6*x)/4",
             "-sin(2*x)*cos(x)*cos(3*x) + sin(2*x)*cos(2*x)/2 - sin(2*x)/4 + sin(6*x)/4",
             "-sin(2*x)*cos(4*x)/2 - sin(2*x)/4 + sin(6*x)/4",
             "0",
         },
         {
             {'P', "sin(3*x)", "cos(x)"},
             {'P', "sin(x)", "sin(3*x)"},
             {'P', "sin(2*x)", "cos(4*x)"},
             {'P', "sin(x)", "cos(3*x)"},
             {'P', "cos(x)", "cos(3*x)"},
             {'P', "sin(2*x)", "cos(4*x)"},
         }},
    };
    return v;
}

// Shallow instances for the expected-length recursion checks.
inline const std::vector<const char*>& expected_length_fixtures() {
    static const std::vector<const char*> v = {
        "sin(3*x + pi/2)*cos(x) - sin(4*x + pi/2)/2 - sin(2*x + pi/2)/2",
        "cos(x)**2 + sin(x)**2 - 1",
        "2*sin(x)*cos(x) - sin(2*x)",
        "sin(x + pi/3) - sin(x)/2 - sqrt(3)*cos(x)/2",
        "2*cos(x)*cos(2*x) - cos(x) - cos(3*x)",
        "sqrt(3)*sin(x)/2 + sqrt(3)*sin(5*x)/2 + cos(x)/2 - cos(5*x)/2 - "
        "2*sin(3*x)*sin(2*x + pi/3)",
    };
    return v;
}

// Sample outputs of the bottom-up generator.
inline const std::vector<const char*>& generated_cases() {
    static const std::vector<const char*> v = {
        "2*sin(2*x)*sin(4*x + pi/4) - cos(2*x + pi/4) + cos(6*x + pi/4)",
        "-sin(x)*sin(6*x)*cos(4*x + pi/4) + sin(x + pi/4)/4 - "
        "cos(7*x)*cos(4*x + pi/4)/2 + cos(9*x + pi/4)/4",
        "-sin(x)*sin(4*x)*cos(x + pi/6) - sin(4*x)*sin(x + pi/6)*cos(x) + "
        "sin(2*x + pi/3)/2 - cos(6*x + pi/6)/2",
        "sqrt(3)*sin(x + pi/3)/4 - sin(4*x + pi/3)*sin(5*x + pi/3) + "
        "sin(9*x + pi/6)/2 + cos(x + pi/3)/4",
        "-sin(5*x)/2 + sin(x + pi/3)/2 - cos(2*x + pi/3)*cos(3*x + pi/6)",
    };
    return v;
}

}  // namespace fixtures
