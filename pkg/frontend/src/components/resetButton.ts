/**
 * Reset-state button: clears the map's state selection. Disabled while
 * nothing is selected.
 */

export interface ResetButtonController {
  element: HTMLElement;
  setSelected(code: string | null): void;
  destroy(): void;
}

export function createResetButton(options: {
  onReset: () => void;
}): ResetButtonController {
  const element = document.createElement("button");
  element.type = "button";
  element.className = "control reset-state";
  element.textContent = "Reset state";
  element.disabled = true;

  const handleClick = () => options.onReset();
  element.addEventListener("click", handleClick);

  return {
    element,

    setSelected(code) {
      element.disabled = code === null;
      element.textContent = code ? `Reset state (${code})` : "Reset state";
    },

    destroy() {
      element.removeEventListener("click", handleClick);
      element.remove();
    },
  };
}
