from setuptools import setup
import os
import tempfile
import nmpoly

# If the installation is on windows, place nmpoly.bat file in Scripts
# directory
script_files = []
if os.name == "nt":
    nmpoly_bat_file = "{}/{}.bat".format(tempfile.gettempdir(), "nmpoly")
    with open(nmpoly_bat_file, 'w') as script:
        script.write('@echo off\npython %~dp0nmpoly %*\n')
    script_files = ['bin/nmpoly', nmpoly_bat_file]
else:
    script_files = ['bin/nmpoly']

setup(name='nmpoly',
      version=nmpoly.__version__,
      description="Decorated Newton polygons of log-power expansions and "
      "the Thom-Sebastiani theorem",
      long_description="A symbolic library and command line tool for "
      "finite log-power asymptotic expansions: decorated Newton polygons, "
      "Mellin coefficients, local Fourier transfer formulas and "
      "Thom-Sebastiani checks, with a numerical oracle that validates "
      "every symbolic rule.",
      install_requires=["lxml", "numpy", "scipy"],
      license='BSD',
      classifiers=[
            'Development Status :: 4 - Beta',
            'License :: OSI Approved :: BSD License',
            'Programming Language :: Python :: 3',
            'Topic :: Scientific/Engineering :: Mathematics',
            ],
      keywords='asymptotic expansion Newton polygon Mellin Fourier',
      scripts=script_files,
      packages=['nmpoly', 'nmpoly.plugins', 'nmpoly.translators',
                'nmpoly.scripts'],
      )

# Remove Bat file
if os.name == "nt":
    os.remove(nmpoly_bat_file)
