from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.structure.managers.structure_manager import StructureManager


class StructureManagerFactory(FactoryInterface):
    """ Factory for creating structure manager object
    """
    def invoke(self, service_manager):
        return StructureManager()
