import os
from setuptools import setup
from src.qprobe import version

# Utility function to read the README file
#   Used for the long_description.
def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


setup(
  # METADATA...
  name = 'qprobe',
  version = version.STR_VERSION,
  url = version.location,
  project_urls = {
    "Documentation": version.location + "/blob/master/ReadMe.md",
    "Source Code": version.location + ".git",
  },
  author = version.author[0],
  author_email = version.author[1],
  maintainer = version.maintainer[0][0],
  maintainer_email = version.maintainer[0][1],
  description = 'Qprobe: Quantum Advantage Probe for Boltzmann Machines',
  license = 'GNU GPLv2+',
  long_description = read('ReadMe.md'),
  long_description_content_type = 'text/markdown',
  platforms = ['LINUX', 'MAC', 'WINDOWS'],
  # OPTIONS...
  python_requires = '>=3.8',
  install_requires = ['numpy>=1.20', 'scipy>=1.7'],
  extras_require = {'test': ['pytest>=6']},
  entry_points = {'console_scripts': ['qprobe=qprobe.qprobe:main']},
  packages = ['qprobe'],
  package_dir = {'qprobe': 'src/qprobe'},
)
