from setuptools import setup

# read the contents of README.md file
from os import path
this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
  name = 'qrealise',
  packages = [
    'qrealise',
    'qrealise.tests',
  ],
  python_requires='>=3.8',
  version = 'v0.1.0',
  license='Apache 2.0',
  description = 'Exact symbolic checks of the q-boson / fermion realization of U_q(gl(2/1))',
  long_description_content_type='text/markdown',
  long_description=long_description,
  author = 'DangerMouseB',
  author_email = 'dangermouseb@forwarding.cc',
  keywords = ['quantum groups', 'superalgebra', 'q-boson', 'fock space', 'symbolic'],
  install_requires=[
    'sympy>=1.9',
    'pyparsing>=3.0',
  ],
  extras_require={
    'test': ['pytest', 'hypothesis'],
  },
  entry_points={
    'console_scripts': ['qrealise = qrealise.cli:main'],
  },
  include_package_data=True,
  classifiers=[
    'Development Status :: 3 - Alpha',
    'Intended Audience :: Science/Research',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Topic :: Scientific/Engineering :: Physics',
    'License :: OSI Approved :: Apache Software License',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
  ],
)
