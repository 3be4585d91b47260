# This file exists within 'ncbandit'.

"""
Packaging instruction for setup tools.

Refs:

  https://setuptools.readthedocs.io/

  https://packaging.python.org/en/latest/distributing.html
"""

from setuptools import find_packages, setup

# *** Package requirements.

requirements = [
    # Platform-specific directory magic (default results directory).
    #  https://github.com/ActiveState/appdirs
    'appdirs >= 1.4.3, < 2',
    # Experiment documents: INI parser plus the `validate` schema checker.
    #  https://github.com/DiffSK/configobj
    #  https://configobj.readthedocs.io/en/latest/
    'configobj >= 5.0.6, < 6',
    # Arrays, PCG64 streams, and SeedSequence spawning.
    #  https://numpy.org/
    'numpy >= 1.17',

    # *** HOTH packages.

    # "Very simple Python library for color and formatting in terminal."
    #  https://github.com/hotoffthehamster/ansi-escape-room
    # Used to color log lines.
    'ansi-escape-room == 1.4.2',
    # Pythonic config @decorator.
    #  https://github.com/hotoffthehamster/config-decorator
    'config-decorator == 2.0.14',
]

setup(
    # Run-time dependencies installed on `pip install`.
    install_requires=requirements,

    # - With the 'exclude*' rule, this call is essentially:
    #     packages=['ncbandit', ...]
    packages=find_packages(exclude=['tests*']),

    entry_points={
        'console_scripts': [
            'ncbandit = ncbandit.cli:main',
        ],
    },

    # Tell setuptools to determine the version
    # from the latest SCM (git) version tag.
    setup_requires=['setuptools_scm'],
    use_scm_version=True,
)
