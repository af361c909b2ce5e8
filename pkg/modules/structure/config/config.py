from typing import Dict
from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.structure.managers.factories.order_manager_factory import OrderManagerFactory
from modules.structure.managers.factories.structure_manager_factory import StructureManagerFactory
from modules.structure.managers.order_manager import OrderManager
from modules.structure.managers.structure_manager import StructureManager


class StructureConfig:

    @classmethod
    def get(cls) -> Dict[str, FactoryInterface]:
        return {
            StructureManager.__name__: StructureManagerFactory(),
            OrderManager.__name__: OrderManagerFactory()
        }
