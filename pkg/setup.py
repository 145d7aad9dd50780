from setuptools import setup

from wreathembed import __version__


setup(name='wreathembed',
      version=__version__,
      description='Wreath products in product action, Cartesian decompositions and diagonal groups, '
                  'with exhaustive verification of their embedding statements',
      license='BSD-3-Clause',
      test_suite='tests',
      python_requires='>=3.8',
      packages=['wreathembed'],
      install_requires=['numpy', 'networkx', 'joblib'],
      tests_require=['hypothesis'],
      provides=["wreathembed"],
      entry_points={
            'console_scripts': ['wreathembed=wreathembed.__main__:main']
      },
      classifiers=["Environment :: Console",
                   "Intended Audience :: Developers",
                   "Intended Audience :: Science/Research",
                   "Operating System :: Unix",
                   "Programming Language :: Python",
                   "Programming Language :: Python :: 3",
                   "Topic :: Scientific/Engineering :: Mathematics"],
      )
