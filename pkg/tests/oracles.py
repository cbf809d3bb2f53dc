"""Frozen reference values, computed once with 40-digit arithmetic.

Produced by an independent arbitrary-precision Gamma implementation
(series evaluation with reflection cross-checks) before the library was
built; the tests compare against these literals, never against the code
under test.
"""

GAMMA_REFERENCES = [
    (complex(1.0, 1.0), complex(0.49801566811835607, -0.15494982830181067)),
    (complex(0.5, 0.0), complex(1.772453850905516, 0.0)),
    (complex(2.5, 0.0), complex(1.329340388179137, 0.0)),
    (complex(-0.5, 2.0), complex(-0.039038849162115516, -0.03516787606268694)),
    (complex(1.0, 0.0), complex(1.0, 0.0)),
    (complex(5.0, 0.0), complex(24.0, 0.0)),
    (complex(0.1, 0.0), complex(9.51350769866873, 0.0)),
    (complex(-2.5, 0.0), complex(-0.9453087204829419, 0.0)),
    (complex(3.0, -4.0), complex(0.0052255384713692146, 0.1725470792943002)),
    (complex(0.5, -0.5), complex(0.8181639995417473, 0.7633138287139826)),
    (complex(-1.5, 1.5), complex(0.027549886741399233, 0.06525193543302056)),
    (complex(6.0, 2.0), complex(-80.04767342563402, -25.885035554405302)),
    (complex(10.0, -3.0), complex(197624.13894976547, -113252.91895947162)),
    (complex(-4.2, -2.2), complex(8.911808666546815e-05, -0.00030267796088990134)),
    (complex(0.25, 5.0), complex(-0.000575867844192022, 0.0003034853345882186)),
    (complex(12.0, 9.0), complex(-1126910.8204903747, -1110877.3747157655)),
    (complex(-0.5, -2.0), complex(-0.039038849162115516, 0.03516787606268694)),
    (complex(2.0, 20.0), complex(-9.867840766005223e-13, -5.00175037172401e-12)),
    (complex(25.0, 3.0), complex(-5.083447475387392e+23, -9.193087030840865e+22)),
    (complex(-8.5, 0.5), complex(-4.83551768129031e-06, -9.480103846715797e-06)),
]

LOG_GAMMA_REFERENCES = [
    (complex(1.0, 1.0), complex(-0.6509231993018564, -0.3016403204675332)),
    (complex(-2.5, 0.5), complex(-0.9350856212982774, -8.87096288524746)),
    (complex(2.0, 20.0), complex(-26.00214115226298, 42.21671455141285)),
    (complex(-3.5, 15.0), complex(-33.52094409043308, 18.812975949250873)),
    (complex(-6.3, -4.2), complex(-17.281300143371656, 13.067980574472559)),
    (complex(-0.5, 0.0), complex(1.2655121234846454, -3.141592653589793)),
    (complex(0.5, 0.0), complex(0.5723649429247001, 0.0)),
    (complex(17.0, -11.0), complex(27.238337303824945, -31.562658634536195)),
]

BETA_REFERENCES = [
    (complex(0.5, 0.5), complex(2.0, 0.0), complex(0.4, -0.8)),
    (complex(1.0, 1.0), complex(0.5, -0.25), complex(1.1569756705906533, 0.08229982730625918)),
    (complex(2.5, 0.0), complex(3.5, 0.0), complex(0.03681553890925539, 0.0)),
    (complex(0.3, 1.2), complex(0.9, -0.4), complex(0.34047692150812753, -0.41086355714847433)),
]

GAMMA_RATIO_REFERENCES = [
    (complex(2.0, 0.0), complex(2.5, 0.5), complex(0.7491105832428641, -0.278909280660767)),
    (complex(1.0, 1.0), complex(3.5, -1.0), complex(0.12607559755584316, 0.13484896504786412)),
    (complex(0.5, 0.0), complex(-0.5, 0.0), complex(-0.5, 0.0)),
]
