from unittest  import TestCase
from brs_utils import (
    create_logger,
)


class Main_tgsearch(TestCase):

    def setUp(self):
        self.logger = create_logger(__name__, 'ERROR')
