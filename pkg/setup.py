# -*- coding: utf-8 -*-

from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(name='heckecentre',
      version='0.1.0',
      description='Integral bases of the centre of the Iwahori-Hecke algebra of type A, in exact arithmetic',
      packages=['heckecentre'],
      long_description=long_description,
      long_description_content_type='text/markdown',
      python_requires='>=3.8',
      install_requires=['numpy', 'sympy'],
      extras_require={'progress': ['tqdm'],
                      'test': ['pytest']},
      entry_points={'console_scripts': ['heckecentre = heckecentre.cli:main']},
      )
