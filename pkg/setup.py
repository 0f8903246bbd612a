"""
The setup script that adds quiverpy into the Python site-packages directory so that it can be imported as a
library, and installs the `quiverpy` command.
"""
from setuptools import setup


# Run the setup
setup(
  name             = "quiverpy",
  version          = "0.0.1",
  description      = "Quivers with relations, their representations and an atlas of equivariant D-modules on spherical vector spaces",
  license          = "All rights are reserved",
  packages         = ["quiverpy",
                      "quiverpy.math",
                      "quiverpy.quiver",
                      "quiverpy.rep",
                      "quiverpy.reptype",
                      "quiverpy.atlas",
                      "quiverpy.moment"
                      ],
  install_requires = ["pandas",
                      "numpy",
                      "sympy",
                      "click"
                     ],
  extras_require   = {"test": ["pytest"]},
  entry_points     = {"console_scripts": ["quiverpy = quiverpy.cli:main"]}
)
